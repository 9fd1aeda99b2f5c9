#include <mutex>
#include <stdexcept>

#include "essgraph/classify.hpp"

namespace essgraph::classify {

namespace {

CatalogEntry make_entry(const std::string& id, std::vector<std::string> aliases = {}) {
    CatalogEntry e;
    e.id = id;
    e.aliases = std::move(aliases);
    e.spec = parse_spec(id);
    FiniteRing r = build_ring(e.spec);
    e.order = r.order;
    e.local = is_local(r).first;
    e.reduced = is_reduced(r);
    auto facts = classify_elements(r);
    e.field = true;
    for (int a = 1; a < r.order; ++a)
        if (!facts.is_unit[a]) e.field = false;
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    // fields first, ascending characteristic-ish order so that product names
    // read naturally ("Z2 x GF(4)")
    for (const char* id : {"Z2", "Z3", "GF(4)", "Z5", "Z7", "GF(8)", "GF(9)", "Z11",
                           "Z13", "GF(16)", "GF(25)", "GF(27)", "GF(32)"})
        out.push_back(make_entry(id));
    // local non-fields, grouped by the size of their zero-divisor set
    out.push_back(make_entry("Z4"));
    out.push_back(make_entry("Z2[x]/(x^2)"));
    out.push_back(make_entry("Z9"));
    out.push_back(make_entry("Z3[x]/(x^2)", {"F3[x]/(x^2)", "GF(3)[x]/(x^2)"}));
    out.push_back(make_entry("Z8"));
    out.push_back(make_entry("Z2[x]/(x^3)"));
    out.push_back(make_entry("Z4[x]/(x^3, x^2-2)"));
    out.push_back(make_entry("Z4[x]/(2x, x^2)"));
    out.push_back(make_entry("GF(4)[x]/(x^2)", {"F4[x]/(x^2)"}));
    out.push_back(make_entry("Z4[x]/(x^2+x+1)"));
    out.push_back(make_entry("Z2[x,y]/(x^2, xy, y^2)"));
    out.push_back(make_entry("Z25"));
    out.push_back(make_entry("Z5[x]/(x^2)"));
    out.push_back(make_entry("Z49"));
    out.push_back(make_entry("Z7[x]/(x^2)"));
    out.push_back(make_entry("Z121"));
    for (const auto& e : out)
        if (!e.local) throw std::logic_error("catalog entry " + e.id + " is not local");
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog()) {
        if (e.id == name) return &e;
        for (const auto& a : e.aliases)
            if (a == name) return &e;
    }
    return nullptr;
}

RingSpec Candidate::spec() const {
    const auto& cat = catalog();
    if (factors.size() == 1) return cat[factors[0]].spec;
    RingSpec s;
    s.kind = RingSpec::Kind::Product;
    for (int i : factors) s.factors.push_back(cat[i].spec);
    return s;
}

std::vector<Candidate> enumerate_products(int max_order) {
    if (max_order > 4096) throw std::invalid_argument("max_order exceeds the order cap");
    const auto& cat = catalog();
    std::vector<Candidate> out;
    for (size_t i = 0; i < cat.size(); ++i)
        if (cat[i].order <= max_order)
            out.push_back({cat[i].id, cat[i].order, {static_cast<int>(i)}});

    // multisets of catalog indices in non-decreasing order
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t from, long order) -> void {
        if (pick.size() >= 2) {
            Candidate c;
            c.order = order;
            c.factors = pick;
            for (size_t k = 0; k < pick.size(); ++k)
                c.name += (k ? " x " : "") + cat[pick[k]].id;
            out.push_back(std::move(c));
        }
        for (size_t i = from; i < cat.size(); ++i) {
            long next = order * cat[i].order;
            if (next > max_order) continue;
            pick.push_back(static_cast<int>(i));
            self(self, i, next);
            pick.pop_back();
        }
    };
    rec(rec, 0, 1);
    return out;
}

}  // namespace essgraph::classify
