#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "essgraph/ring.hpp"

namespace essgraph {

namespace {

constexpr long kOrderCap = 4096;
constexpr int kValidateCap = 256;

int ring_neg(const FiniteRing& r, int a) {
    for (int x = 0; x < r.order; ++x)
        if (r.add[a][x] == r.zero) return x;
    throw std::logic_error("element without additive inverse");
}

std::optional<int> ring_inv(const FiniteRing& r, int a) {
    for (int x = 0; x < r.order; ++x)
        if (r.mul[a][x] == r.one) return x;
    return std::nullopt;
}

int scalar(const FiniteRing& r, long c) {
    int v = r.zero;
    long k = c >= 0 ? c : -c;
    for (long i = 0; i < k; ++i) v = r.add[v][r.one];
    return c >= 0 ? v : ring_neg(r, v);
}

struct Built {
    FiniteRing ring;
    std::map<std::string, int> env;  // quotient variables as ring elements
};

int eval_poly(const Poly& p, const FiniteRing& r, const std::map<std::string, int>& env) {
    int out = r.zero;
    for (const auto& [mono, c] : p.terms) {
        int t = scalar(r, c);
        for (const auto& [v, e] : mono) {
            auto it = env.find(v);
            if (it == env.end()) throw std::runtime_error("unbound variable " + v);
            for (int i = 0; i < e; ++i) t = r.mul[t][it->second];
        }
        out = r.add[out][t];
    }
    return out;
}

std::string coeff_name(const std::string& n) {
    if (n.find('+') != std::string::npos || n.find('-') != std::string::npos)
        return "(" + n + ")";
    return n;
}

Built build_rec(const RingSpec& spec);

Built build_zn(int n) {
    if (n < 2) throw std::runtime_error("Zn modulus must be >= 2");
    if (n > kOrderCap) throw std::runtime_error("order cap exceeded");
    Built b;
    b.ring.order = n;
    b.ring.zero = 0;
    b.ring.one = 1 % n;
    b.ring.add.assign(n, std::vector<int>(n));
    b.ring.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        b.ring.names.push_back(std::to_string(i));
        for (int j = 0; j < n; ++j) {
            b.ring.add[i][j] = (i + j) % n;
            b.ring.mul[i][j] = static_cast<int>((static_cast<long>(i) * j) % n);
        }
    }
    return b;
}

Built build_monic(const RingSpec& spec) {
    Built base = build_rec(*spec.base);
    const FiniteRing& B = base.ring;
    const std::string& v = spec.variable;
    int d = spec.monic.degree_in(v);
    if (d < 1) throw std::runtime_error("quotient modulus must involve " + v);

    // coefficients of the modulus as base elements, normalized monic
    std::vector<int> mod(d + 1);
    for (int k = 0; k <= d; ++k)
        mod[k] = eval_poly(spec.monic.coeff_of(v, k), B, base.env);
    auto lead_inv = ring_inv(B, mod[d]);
    if (!lead_inv) throw std::runtime_error("leading coefficient is not a unit");
    for (int k = 0; k <= d; ++k) mod[k] = B.mul[mod[k]][*lead_inv];

    long order = 1;
    for (int k = 0; k < d; ++k) {
        order *= B.order;
        if (order > kOrderCap) throw std::runtime_error("order cap exceeded");
    }

    auto decode = [&](int idx) {
        std::vector<int> c(d);
        for (int k = 0; k < d; ++k) {
            c[k] = idx % B.order;
            idx /= B.order;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        long idx = 0;
        for (int k = d - 1; k >= 0; --k) idx = idx * B.order + c[k];
        return static_cast<int>(idx);
    };

    Built out;
    FiniteRing& R = out.ring;
    R.order = static_cast<int>(order);
    R.zero = 0;
    R.add.assign(R.order, std::vector<int>(R.order));
    R.mul.assign(R.order, std::vector<int>(R.order));
    std::vector<int> negs(B.order);
    for (int a = 0; a < B.order; ++a) negs[a] = ring_neg(B, a);

    for (int i = 0; i < R.order; ++i) {
        auto ci = decode(i);
        std::string name;
        for (int k = d - 1; k >= 0; --k) {
            if (ci[k] == B.zero) continue;
            if (!name.empty()) name += "+";
            std::string coef = coeff_name(B.names[ci[k]]);
            if (k == 0) {
                name += coef;
            } else {
                if (ci[k] != B.one) name += coef;
                name += v;
                if (k > 1) name += "^" + std::to_string(k);
            }
        }
        R.names.push_back(name.empty() ? B.names[B.zero] : name);
        for (int j = 0; j < R.order; ++j) {
            auto cj = decode(j);
            std::vector<int> s(d);
            for (int k = 0; k < d; ++k) s[k] = B.add[ci[k]][cj[k]];
            R.add[i][j] = encode(s);
            // convolution then reduction by the monic modulus
            std::vector<int> p(2 * d - 1, B.zero);
            for (int a = 0; a < d; ++a)
                for (int bb = 0; bb < d; ++bb)
                    p[a + bb] = B.add[p[a + bb]][B.mul[ci[a]][cj[bb]]];
            for (int k = 2 * d - 2; k >= d; --k) {
                int t = p[k];
                if (t == B.zero) continue;
                p[k] = B.zero;
                for (int m = 0; m < d; ++m)
                    p[k - d + m] = B.add[p[k - d + m]][B.mul[t][negs[mod[m]]]];
            }
            p.resize(d);
            R.mul[i][j] = encode(p);
        }
    }
    R.one = [&] {
        std::vector<int> c(d, B.zero);
        c[0] = B.one;
        return encode(c);
    }();
    for (const auto& [name, val] : base.env) {
        std::vector<int> c(d, B.zero);
        c[0] = val;
        out.env[name] = encode(c);
    }
    {
        std::vector<int> c(d, B.zero);
        if (d >= 2) {
            c[1] = B.one;
            out.env[v] = encode(c);
        } else {
            // degree-1 modulus: the variable collapses to a base element
            out.env[v] = encode({negs[mod[0]]});
        }
    }
    return out;
}

Built build_ideal_quotient(const RingSpec& spec) {
    Built base = build_rec(*spec.base);
    const FiniteRing& B = base.ring;
    std::vector<int> gens;
    for (const auto& p : spec.gens) gens.push_back(eval_poly(p, B, base.env));
    Ideal I = generated_ideal(B, gens);

    std::vector<int> proj(B.order, -1), reps;
    for (int a = 0; a < B.order; ++a) {
        if (proj[a] >= 0) continue;
        int cls = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int i = 0; i < B.order; ++i)
            if (I.member[i]) proj[B.add[a][i]] = cls;
    }
    if (proj[B.one] == proj[B.zero])
        throw std::runtime_error("quotient collapses to the zero ring");

    Built out;
    FiniteRing& R = out.ring;
    R.order = static_cast<int>(reps.size());
    R.zero = proj[B.zero];
    R.one = proj[B.one];
    R.add.assign(R.order, std::vector<int>(R.order));
    R.mul.assign(R.order, std::vector<int>(R.order));
    for (int i = 0; i < R.order; ++i) {
        R.names.push_back(B.names[reps[i]]);
        for (int j = 0; j < R.order; ++j) {
            R.add[i][j] = proj[B.add[reps[i]][reps[j]]];
            R.mul[i][j] = proj[B.mul[reps[i]][reps[j]]];
        }
    }
    if (R.zero != 0) throw std::logic_error("zero coset expected at index 0");
    for (const auto& [name, val] : base.env) out.env[name] = proj[val];
    return out;
}

Built build_product(const RingSpec& spec) {
    std::vector<FiniteRing> parts;
    long order = 1;
    for (const auto& f : spec.factors) {
        parts.push_back(build_rec(f).ring);
        order *= parts.back().order;
        if (order > kOrderCap) throw std::runtime_error("order cap exceeded");
    }
    Built out;
    FiniteRing& R = out.ring;
    R.order = static_cast<int>(order);
    auto decode = [&](int idx) {
        std::vector<int> c(parts.size());
        for (size_t k = 0; k < parts.size(); ++k) {
            c[k] = idx % parts[k].order;
            idx /= parts[k].order;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        long idx = 0;
        for (size_t k = parts.size(); k-- > 0;) idx = idx * parts[k].order + c[k];
        return static_cast<int>(idx);
    };
    R.zero = 0;
    R.add.assign(R.order, std::vector<int>(R.order));
    R.mul.assign(R.order, std::vector<int>(R.order));
    for (int i = 0; i < R.order; ++i) {
        auto ci = decode(i);
        std::string name = "(";
        for (size_t k = 0; k < parts.size(); ++k) {
            if (k) name += ",";
            name += parts[k].names[ci[k]];
        }
        R.names.push_back(name + ")");
        for (int j = 0; j < R.order; ++j) {
            auto cj = decode(j);
            std::vector<int> s(parts.size()), m(parts.size());
            for (size_t k = 0; k < parts.size(); ++k) {
                s[k] = parts[k].add[ci[k]][cj[k]];
                m[k] = parts[k].mul[ci[k]][cj[k]];
            }
            R.add[i][j] = encode(s);
            R.mul[i][j] = encode(m);
        }
    }
    std::vector<int> ones(parts.size());
    for (size_t k = 0; k < parts.size(); ++k) ones[k] = parts[k].one;
    R.one = encode(ones);
    return out;
}

Built build_rec(const RingSpec& spec) {
    switch (spec.kind) {
        case RingSpec::Kind::Zn: return build_zn(spec.modulus);
        case RingSpec::Kind::MonicQuotient: return build_monic(spec);
        case RingSpec::Kind::IdealQuotient: return build_ideal_quotient(spec);
        case RingSpec::Kind::Product: return build_product(spec);
    }
    throw std::logic_error("unknown spec kind");
}

}  // namespace

int Ideal::size() const {
    return static_cast<int>(std::count(member.begin(), member.end(), 1));
}

FiniteRing build_ring(const RingSpec& spec) {
    Built b = build_rec(spec);
    if (b.ring.order <= kValidateCap) validate_ring(b.ring);
    return b.ring;
}

void validate_ring(const FiniteRing& r) {
    int n = r.order;
    if (n < 2 || r.one == r.zero) throw std::logic_error("ring needs 1 != 0");
    for (int a = 0; a < n; ++a) {
        if (r.add[a][r.zero] != a || r.mul[a][r.one] != a)
            throw std::logic_error("identity axiom fails");
        ring_neg(r, a);  // throws when no inverse
        for (int b = 0; b < n; ++b) {
            if (r.add[a][b] != r.add[b][a] || r.mul[a][b] != r.mul[b][a])
                throw std::logic_error("commutativity fails");
            for (int c = 0; c < n; ++c) {
                if (r.add[r.add[a][b]][c] != r.add[a][r.add[b][c]])
                    throw std::logic_error("additive associativity fails");
                if (r.mul[r.mul[a][b]][c] != r.mul[a][r.mul[b][c]])
                    throw std::logic_error("multiplicative associativity fails");
                if (r.mul[a][r.add[b][c]] != r.add[r.mul[a][b]][r.mul[a][c]])
                    throw std::logic_error("distributivity fails");
            }
        }
    }
}

Ideal principal_ideal(const FiniteRing& r, int a) {
    Ideal i;
    i.member.assign(r.order, 0);
    for (int x = 0; x < r.order; ++x) i.member[r.mul[a][x]] = 1;
    return i;
}

Ideal generated_ideal(const FiniteRing& r, const std::vector<int>& gens) {
    Ideal i;
    i.member.assign(r.order, 0);
    i.member[r.zero] = 1;
    for (int g : gens) {
        auto p = principal_ideal(r, g);
        for (int x = 0; x < r.order; ++x)
            if (p.member[x]) i.member[x] = 1;
    }
    // additive closure to a fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < r.order; ++a) {
            if (!i.member[a]) continue;
            for (int b = a; b < r.order; ++b) {
                if (!i.member[b]) continue;
                int s = r.add[a][b];
                if (!i.member[s]) {
                    i.member[s] = 1;
                    changed = true;
                }
            }
        }
    }
    return i;
}

Ideal annihilator(const FiniteRing& r, int a) {
    Ideal i;
    i.member.assign(r.order, 0);
    for (int x = 0; x < r.order; ++x)
        if (r.mul[a][x] == r.zero) i.member[x] = 1;
    return i;
}

bool is_essential(const FiniteRing& r, const Ideal& i) {
    for (int a = 0; a < r.order; ++a) {
        if (a == r.zero) continue;
        bool meets = false;
        for (int x = 0; x < r.order && !meets; ++x) {
            int t = r.mul[a][x];
            if (t != r.zero && i.member[t]) meets = true;
        }
        if (!meets) return false;
    }
    return true;
}

std::vector<Ideal> enumerate_ideals(const FiniteRing& r) {
    std::set<std::vector<char>> seen;
    std::vector<std::vector<char>> work;
    Ideal zero_ideal;
    zero_ideal.member.assign(r.order, 0);
    zero_ideal.member[r.zero] = 1;
    seen.insert(zero_ideal.member);
    work.push_back(zero_ideal.member);
    while (!work.empty()) {
        auto cur = work.back();
        work.pop_back();
        for (int a = 0; a < r.order; ++a) {
            if (cur[a]) continue;
            Ideal grown;
            grown.member = cur;
            auto p = principal_ideal(r, a);
            for (int x = 0; x < r.order; ++x)
                if (p.member[x]) grown.member[x] = 1;
            // close additively
            bool changed = true;
            while (changed) {
                changed = false;
                for (int u = 0; u < r.order; ++u) {
                    if (!grown.member[u]) continue;
                    for (int v = u; v < r.order; ++v) {
                        if (!grown.member[v]) continue;
                        int s = r.add[u][v];
                        if (!grown.member[s]) {
                            grown.member[s] = 1;
                            changed = true;
                        }
                    }
                }
            }
            if (seen.insert(grown.member).second) work.push_back(grown.member);
        }
    }
    std::vector<Ideal> out;
    for (const auto& m : seen) {
        Ideal i;
        i.member = m;
        out.push_back(std::move(i));
    }
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.member < b.member;
    });
    return out;
}

ElementFacts classify_elements(const FiniteRing& r) {
    ElementFacts f;
    int n = r.order;
    f.is_unit.assign(n, 0);
    f.is_zero_divisor.assign(n, 0);
    f.is_nilpotent.assign(n, 0);
    f.nilpotency_index.assign(n, std::nullopt);
    for (int a = 0; a < n; ++a) {
        f.is_unit[a] = ring_inv(r, a).has_value();
        bool kills = false;
        for (int b = 0; b < n; ++b)
            if (b != r.zero && r.mul[a][b] == r.zero) kills = true;
        bool zd = a != r.zero && !f.is_unit[a];
        if (zd != (a != r.zero && kills))
            throw std::logic_error("unit/zero-divisor dichotomy violated");
        f.is_zero_divisor[a] = zd;
        int p = a;
        for (int k = 1; k <= n; ++k) {
            if (p == r.zero) {
                f.is_nilpotent[a] = 1;
                f.nilpotency_index[a] = k == 1 ? 1 : k;
                break;
            }
            p = r.mul[p][a];
        }
        if (a == r.zero) {
            f.is_nilpotent[a] = 1;
            f.nilpotency_index[a] = 1;
        }
    }
    return f;
}

std::pair<bool, std::optional<Ideal>> is_local(const FiniteRing& r) {
    auto f = classify_elements(r);
    Ideal m;
    m.member.assign(r.order, 0);
    for (int a = 0; a < r.order; ++a)
        if (!f.is_unit[a]) m.member[a] = 1;
    for (int a = 0; a < r.order; ++a)
        for (int b = 0; b < r.order; ++b)
            if (m.member[a] && m.member[b] && !m.member[r.add[a][b]])
                return {false, std::nullopt};
    return {true, m};
}

bool is_reduced(const FiniteRing& r) {
    auto f = classify_elements(r);
    for (int a = 0; a < r.order; ++a)
        if (a != r.zero && f.is_nilpotent[a]) return false;
    return true;
}

namespace {

Graph divisor_graph(const FiniteRing& r, bool essential) {
    auto f = classify_elements(r);
    std::vector<int> verts;
    for (int a = 0; a < r.order; ++a)
        if (f.is_zero_divisor[a]) verts.push_back(a);
    std::vector<std::string> labels;
    for (int a : verts) labels.push_back(r.names[a]);
    Graph g(static_cast<int>(verts.size()), labels);
    std::vector<std::optional<char>> ess(r.order);  // by product value
    auto edge_ok = [&](int u, int v) {
        int p = r.mul[u][v];
        if (!essential) return p == r.zero;
        if (!ess[p]) ess[p] = is_essential(r, annihilator(r, p)) ? 1 : 0;
        return *ess[p] == 1;
    };
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (edge_ok(verts[i], verts[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

}  // namespace

Graph zero_divisor_graph(const FiniteRing& r) { return divisor_graph(r, false); }
Graph essential_graph(const FiniteRing& r) { return divisor_graph(r, true); }

}  // namespace essgraph
