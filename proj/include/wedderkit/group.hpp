#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wedderkit {

// Small finite group given by its multiplication table. The identity always
// sits at index 0; associativity is checked exhaustively up to order 64 and
// on sampled triples above that.
class FiniteGroup {
public:
    struct MetacyclicPresentation {
        long m = 0, n = 0, t = 0, r = 0;
    };

    FiniteGroup() = default; // empty shell; filled by the factory functions

    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> labels = {});
    // <a, b | a^m = 1, b^n = a^t, a^b = a^r>; elements ordered a^i b^j with
    // index j*m + i so text output follows the a-then-b coefficient layout.
    static FiniteGroup metacyclic(long m, long n, long t, long r);
    static FiniteGroup cyclic(long n);
    static FiniteGroup abelian(const std::vector<long>& dims);

    int size() const { return size_; }
    int identity() const { return 0; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * size_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int conjugate(int g, int x) const { return mul(mul(inv(x), g), x); } // g^x
    int power(int g, long e) const;
    long element_order(int g) const { return order_[g]; }
    const std::string& label(int g) const { return labels_[g]; }
    const std::optional<MetacyclicPresentation>& presentation() const { return pres_; }

    // A small generating set (greedy closure).
    const std::vector<int>& generators() const { return generators_; }

    std::vector<std::vector<int>> table() const;

private:
    void finalize();

    int size_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<long> order_;
    std::vector<std::string> labels_;
    std::vector<int> generators_;
    std::optional<MetacyclicPresentation> pres_;
};

struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elements;   // sorted
    std::vector<char> mask;      // size of parent

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const { return mask[g] != 0; }
    bool operator==(const Subgroup& o) const {
        return parent == o.parent && elements == o.elements;
    }
    bool operator<(const Subgroup& o) const { return elements < o.elements; }
};

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

bool is_subgroup_of(const Subgroup& a, const Subgroup& b);
bool is_normal_in(const Subgroup& h, const Subgroup& n); // requires h <= n
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup conjugate_subgroup(const Subgroup& h, int g); // h^g
Subgroup normalizer(const Subgroup& k);                // N_G(K) in the parent
Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& s);
Subgroup derived_subgroup(const Subgroup& h);
bool is_abelian(const Subgroup& h);

// Right coset representatives of H in N (H <= N), minimal index per coset.
std::vector<int> right_transversal(const Subgroup& h, const Subgroup& n);

// Minimal-index y in H with H/K = <yK>; throws if the quotient is not cyclic.
int quotient_cyclic_generator(const Subgroup& h, const Subgroup& k);
bool quotient_is_cyclic(const Subgroup& h, const Subgroup& k);
// Order of the coset gK in H/K (smallest d > 0 with g^d in K).
long coset_order(const Subgroup& k, int g);

enum class ClassKind { Ordinary, Rational, Real };
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g, ClassKind kind);

// Every subgroup, by closure over cyclic seeds and pairwise joins.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int bound = 512);
std::vector<Subgroup> all_subgroups_within(const Subgroup& h, int bound = 512);

struct Quotient {
    FiniteGroup group;          // N/K with identity coset at index 0
    std::vector<int> coset_of;  // parent element -> coset index (-1 outside N)
    std::vector<int> reps;      // coset index -> minimal parent representative
};
Quotient quotient(const Subgroup& n, const Subgroup& k); // requires K normal in N

} // namespace wedderkit
