#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "essgraph/graph.hpp"

namespace essgraph {

/// Integer-coefficient polynomial in named variables; a term maps each
/// variable to its exponent.
struct Poly {
    std::map<std::map<std::string, int>, long> terms;

    static Poly constant(long c);
    static Poly var(const std::string& v);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    int degree_in(const std::string& v) const;
    /// Coefficient of v^k, itself a polynomial in the remaining variables.
    Poly coeff_of(const std::string& v, int k) const;
    bool uses_only(const std::vector<std::string>& vars) const;
    std::string str() const;
};

struct RingSpec {
    enum class Kind { Zn, MonicQuotient, IdealQuotient, Product };
    Kind kind = Kind::Zn;

    int modulus = 0;                      // Zn
    std::shared_ptr<RingSpec> base;       // quotients
    std::string variable;                 // MonicQuotient
    Poly monic;                           // MonicQuotient modulus
    std::vector<Poly> gens;               // IdealQuotient generators
    std::vector<RingSpec> factors;        // Product
};

/// Explicit finite commutative ring: full addition/multiplication tables over
/// element indices 0..order-1.
struct FiniteRing {
    int order = 0;
    std::vector<std::vector<int>> add, mul;
    int zero = 0, one = 1;
    std::vector<std::string> names;
};

struct Ideal {
    std::vector<char> member;  // indexed by ring element

    bool contains(int a) const { return member[a]; }
    int size() const;
};

struct ElementFacts {
    std::vector<char> is_unit, is_zero_divisor, is_nilpotent;
    std::vector<std::optional<int>> nilpotency_index;
};

/// Parse the ring-spec grammar:
///   spec := prod ; prod := atom { "x" atom }
///   atom := "Z" INT | "GF(" INT ")" | quot | "(" spec ")"
///   quot := atom "[" VAR {"," VAR} "]" "/(" poly {"," poly} ")"
/// Multivariate quotients are lowered to a tower of univariate monic
/// quotients (one monic generator per declared variable) followed by an
/// IdealQuotient of the remaining generators.
RingSpec parse_spec(const std::string& text);

/// Materialize the tables. Validates the ring axioms exhaustively for orders
/// up to 256 and throws past the order cap (4096) or on a non-unit leading
/// coefficient / non-field GF argument.
FiniteRing build_ring(const RingSpec& spec);

/// Exhaustive ring-axiom check (abelian add group, commutative associative
/// mul with 1 != 0, distributivity). Throws std::logic_error on violation.
void validate_ring(const FiniteRing& r);

Ideal principal_ideal(const FiniteRing& r, int a);
Ideal generated_ideal(const FiniteRing& r, const std::vector<int>& gens);
Ideal annihilator(const FiniteRing& r, int a);

/// I intersects every nonzero ideal nontrivially; decided against principal
/// ideals only, which is equivalent (every nonzero ideal contains a nonzero
/// principal one).
bool is_essential(const FiniteRing& r, const Ideal& i);

/// All ideals, via closure of generator sets to a fixpoint. Intended as the
/// definitional oracle for is_essential at small orders.
std::vector<Ideal> enumerate_ideals(const FiniteRing& r);

ElementFacts classify_elements(const FiniteRing& r);

/// Local iff the non-units are closed under addition; then they form the
/// unique maximal ideal.
std::pair<bool, std::optional<Ideal>> is_local(const FiniteRing& r);
bool is_reduced(const FiniteRing& r);

/// Vertices are the nonzero zero-divisors (labelled by element names);
/// edge uv iff u*v = 0.
Graph zero_divisor_graph(const FiniteRing& r);
/// Edge uv iff ann(u*v) is essential; always contains the zero-divisor graph.
Graph essential_graph(const FiniteRing& r);

}  // namespace essgraph
