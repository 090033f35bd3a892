#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace assoc {

// Typed generator symbols for every algebra family.
//
// TIJ(i,j) is stored with i < j; symmetry of t_{ij} is a storage convention.
// TII(i) is the framing generator on strand i.
// XG/YG carry a strand index i and a handle index a (1-based).
// FREE(name) is a named weight-1 generator of a free algebra.
enum class GenKind : uint8_t { TIJ, TII, XG, YG, FREE };

struct Gen {
    GenKind kind;
    int i = 0;
    int j = 0;
    int a = 0;
    std::string free_name;

    static Gen tij(int i, int j) {
        if (i > j) std::swap(i, j);
        return Gen{GenKind::TIJ, i, j, 0, {}};
    }
    static Gen tii(int i) { return Gen{GenKind::TII, i, i, 0, {}}; }
    static Gen xg(int i, int a) { return Gen{GenKind::XG, i, 0, a, {}}; }
    static Gen yg(int i, int a) { return Gen{GenKind::YG, i, 0, a, {}}; }
    static Gen free(std::string name) { return Gen{GenKind::FREE, 0, 0, 0, std::move(name)}; }

    bool operator==(const Gen& o) const {
        return kind == o.kind && i == o.i && j == o.j && a == o.a && free_name == o.free_name;
    }

    std::string name() const {
        std::ostringstream os;
        switch (kind) {
            case GenKind::TIJ:
            case GenKind::TII:
                os << "t" << i << j;
                break;
            case GenKind::XG:
                os << "x" << i << "_" << a;
                break;
            case GenKind::YG:
                os << "y" << i << "_" << a;
                break;
            case GenKind::FREE:
                os << free_name;
                break;
        }
        return os.str();
    }
};

// Ordered, weighted alphabet. Letter order (index order) drives the Lyndon
// basis and every serialized artifact, so construction order is part of the
// public contract of each family.
struct Alphabet {
    std::vector<Gen> gens;
    std::vector<int> weights;

    int size() const { return static_cast<int>(gens.size()); }
    int weight(int letter) const { return weights[letter]; }

    int find(const Gen& g) const {
        for (int k = 0; k < size(); ++k)
            if (gens[k] == g) return k;
        return -1;
    }

    bool all_single_char() const {
        for (const auto& g : gens)
            if (g.name().size() != 1) return false;
        return true;
    }
};

}  // namespace assoc
