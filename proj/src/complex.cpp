#include "spg/complex.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace spg {

Player player_from_string(std::string_view s)
{
    if (s == "L" || s == "l" || s == "Left" || s == "left") {
        return Player::Left;
    }
    if (s == "R" || s == "r" || s == "Right" || s == "right") {
        return Player::Right;
    }
    throw Error("unknown player '" + std::string(s) + "' (expected L or R)");
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

bool natural_less(std::string_view a, std::string_view b)
{
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ie = i;
            std::size_t je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) {
                ++ie;
            }
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) {
                ++je;
            }
            // strip leading zeros, then longer run is larger
            std::size_t is = i;
            std::size_t js = j;
            while (is + 1 < ie && a[is] == '0') {
                ++is;
            }
            while (js + 1 < je && b[js] == '0') {
                ++js;
            }
            const std::string_view ra = a.substr(is, ie - is);
            const std::string_view rb = b.substr(js, je - js);
            if (ra.size() != rb.size()) {
                return ra.size() < rb.size();
            }
            if (ra != rb) {
                return ra < rb;
            }
            if ((ie - i) != (je - j)) {
                return (ie - i) < (je - j);
            }
            i = ie;
            j = je;
            continue;
        }
        if (a[i] != b[j]) {
            return a[i] < b[j];
        }
        ++i;
        ++j;
    }
    return (a.size() - i) < (b.size() - j);
}

bool canonical_vertex_less(const Vertex& a, const Vertex& b)
{
    if (a.part != b.part) {
        return a.part == Player::Left;
    }
    return natural_less(a.name, b.name);
}

bool index_sequence_less(VertexMask a, VertexMask b)
{
    while (a != 0 && b != 0) {
        const int la = __builtin_ctzll(a);
        const int lb = __builtin_ctzll(b);
        if (la != lb) {
            return la < lb;
        }
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<VertexMask> maximal_elements(std::vector<VertexMask> family)
{
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    // larger sets first so a candidate only needs checking against kept sets
    std::sort(family.begin(), family.end(),
              [](VertexMask a, VertexMask b) { return popcount(a) > popcount(b); });
    std::vector<VertexMask> kept;
    for (VertexMask f : family) {
        const bool dominated = std::any_of(kept.begin(), kept.end(),
                                           [f](VertexMask k) { return is_subset(f, k); });
        if (!dominated) {
            kept.push_back(f);
        }
    }
    std::sort(kept.begin(), kept.end(), index_sequence_less);
    return kept;
}

std::vector<VertexMask> minimal_elements(std::vector<VertexMask> family)
{
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::sort(family.begin(), family.end(),
              [](VertexMask a, VertexMask b) { return popcount(a) < popcount(b); });
    std::vector<VertexMask> kept;
    for (VertexMask f : family) {
        const bool dominated = std::any_of(kept.begin(), kept.end(),
                                           [f](VertexMask k) { return is_subset(k, f); });
        if (!dominated) {
            kept.push_back(f);
        }
    }
    std::sort(kept.begin(), kept.end(), index_sequence_less);
    return kept;
}

namespace {

void check_vertex_list(const std::vector<Vertex>& vertices)
{
    if (vertices.size() > kMaxVertices) {
        throw Error("at most 64 vertices are supported, got " + std::to_string(vertices.size()));
    }
    std::set<std::string> seen;
    for (const auto& v : vertices) {
        if (!seen.insert(v.name).second) {
            throw Error("duplicate vertex name '" + v.name + "'");
        }
    }
}

// Permutation sorting `vertices` canonically, and the induced mask remapping.
std::vector<std::size_t> canonical_order(const std::vector<Vertex>& vertices)
{
    std::vector<std::size_t> order(vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return canonical_vertex_less(vertices[a], vertices[b]);
    });
    return order;
}

VertexMask remap(VertexMask m, const std::vector<int>& old_to_new)
{
    VertexMask out = 0;
    while (m != 0) {
        const int i = __builtin_ctzll(m);
        m &= m - 1;
        out |= bit(static_cast<std::size_t>(old_to_new[static_cast<std::size_t>(i)]));
    }
    return out;
}

std::string concat_names(const std::vector<std::string>& names)
{
    std::string out;
    for (const auto& n : names) {
        out += n;
    }
    return out;
}

} // namespace

LabeledComplex LabeledComplex::empty_face_only()
{
    LabeledComplex c;
    c.void_ = false;
    c.facets_ = {0};
    return c;
}

LabeledComplex LabeledComplex::from_masks(const std::vector<Vertex>& vertices,
                                          const std::vector<VertexMask>& facets)
{
    check_vertex_list(vertices);
    LabeledComplex c;
    if (facets.empty()) {
        return c;
    }
    const VertexMask all = vertices.size() == 64 ? ~VertexMask{0} : bit(vertices.size()) - 1;
    VertexMask used = 0;
    for (VertexMask f : facets) {
        if (!is_subset(f, all)) {
            throw Error("facet mask refers to a vertex outside the vertex list");
        }
        used |= f;
    }
    std::vector<Vertex> kept;
    std::vector<int> old_to_new(vertices.size(), -1);
    for (std::size_t idx : canonical_order(vertices)) {
        if ((used & bit(idx)) != 0) {
            old_to_new[idx] = static_cast<int>(kept.size());
            kept.push_back(vertices[idx]);
        }
    }
    std::vector<VertexMask> remapped;
    remapped.reserve(facets.size());
    for (VertexMask f : facets) {
        remapped.push_back(remap(f, old_to_new));
    }
    c.void_ = false;
    c.vertices_ = std::move(kept);
    c.facets_ = maximal_elements(std::move(remapped));
    return c;
}

LabeledComplex LabeledComplex::from_facets(const std::vector<std::vector<std::string>>& facets,
                                           const PartMap& part)
{
    std::vector<Vertex> vertices;
    std::map<std::string, std::size_t> index;
    for (const auto& facet : facets) {
        for (const auto& name : facet) {
            if (index.count(name) != 0) {
                continue;
            }
            auto it = part.find(name);
            if (it == part.end()) {
                throw Error("vertex '" + name + "' has no Left/Right part assigned");
            }
            index.emplace(name, vertices.size());
            vertices.push_back({name, it->second});
        }
    }
    std::vector<VertexMask> masks;
    for (const auto& facet : facets) {
        VertexMask m = 0;
        for (const auto& name : facet) {
            m |= bit(index.at(name));
        }
        masks.push_back(m);
    }
    return from_masks(vertices, masks);
}

std::vector<std::vector<std::string>> LabeledComplex::facets() const
{
    std::vector<std::vector<std::string>> out;
    out.reserve(facets_.size());
    for (VertexMask f : facets_) {
        out.push_back(names(f));
    }
    return out;
}

std::optional<std::size_t> LabeledComplex::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

VertexMask LabeledComplex::mask_of(const std::vector<std::string>& names) const
{
    VertexMask m = 0;
    for (const auto& n : names) {
        auto idx = index_of(n);
        if (!idx) {
            throw Error("unknown vertex '" + n + "'");
        }
        m |= bit(*idx);
    }
    return m;
}

std::vector<std::string> LabeledComplex::names(VertexMask mask) const
{
    std::vector<std::string> out;
    while (mask != 0) {
        const int i = __builtin_ctzll(mask);
        mask &= mask - 1;
        out.push_back(vertices_.at(static_cast<std::size_t>(i)).name);
    }
    return out;
}

PartMap LabeledComplex::parts() const
{
    PartMap out;
    for (const auto& v : vertices_) {
        out.emplace(v.name, v.part);
    }
    return out;
}

VertexMask LabeledComplex::part_mask(Player p) const
{
    VertexMask m = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].part == p) {
            m |= bit(i);
        }
    }
    return m;
}

bool LabeledComplex::contains_face(VertexMask face) const
{
    return std::any_of(facets_.begin(), facets_.end(),
                       [face](VertexMask f) { return is_subset(face, f); });
}

SquareFreeIdeal SquareFreeIdeal::from_masks(const std::vector<Vertex>& variables,
                                            const std::vector<VertexMask>& generators)
{
    check_vertex_list(variables);
    SquareFreeIdeal ideal;
    const auto order = canonical_order(variables);
    std::vector<int> old_to_new(variables.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        old_to_new[order[k]] = static_cast<int>(k);
        ideal.variables_.push_back(variables[order[k]]);
    }
    std::vector<VertexMask> remapped;
    for (VertexMask g : generators) {
        remapped.push_back(remap(g, old_to_new));
    }
    ideal.generators_ = minimal_elements(std::move(remapped));
    return ideal;
}

SquareFreeIdeal SquareFreeIdeal::from_names(const std::vector<Vertex>& variables,
                                            const std::vector<std::vector<std::string>>& generators)
{
    std::vector<VertexMask> masks;
    for (const auto& g : generators) {
        VertexMask m = 0;
        for (const auto& name : g) {
            auto it = std::find_if(variables.begin(), variables.end(),
                                   [&](const Vertex& v) { return v.name == name; });
            if (it == variables.end()) {
                throw Error("generator uses unknown variable '" + name + "'");
            }
            m |= bit(static_cast<std::size_t>(it - variables.begin()));
        }
        masks.push_back(m);
    }
    return from_masks(variables, masks);
}

std::vector<std::string> SquareFreeIdeal::names(VertexMask mask) const
{
    std::vector<std::string> out;
    while (mask != 0) {
        const int i = __builtin_ctzll(mask);
        mask &= mask - 1;
        out.push_back(variables_.at(static_cast<std::size_t>(i)).name);
    }
    return out;
}

std::vector<std::vector<std::string>> SquareFreeIdeal::generators() const
{
    std::vector<std::vector<std::string>> out;
    for (VertexMask g : generators_) {
        out.push_back(names(g));
    }
    return out;
}

bool SquareFreeIdeal::contains(VertexMask monomial) const
{
    return std::any_of(generators_.begin(), generators_.end(),
                       [monomial](VertexMask g) { return is_subset(g, monomial); });
}

std::vector<VertexMask> faces(const LabeledComplex& complex)
{
    std::unordered_set<VertexMask> seen;
    for (VertexMask f : complex.facet_masks()) {
        // every submask of f, including f and 0
        VertexMask s = f;
        while (true) {
            seen.insert(s);
            if (s == 0) {
                break;
            }
            s = (s - 1) & f;
        }
    }
    std::vector<VertexMask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](VertexMask a, VertexMask b) {
        if (popcount(a) != popcount(b)) {
            return popcount(a) < popcount(b);
        }
        return index_sequence_less(a, b);
    });
    return out;
}

int dimension(const LabeledComplex& complex)
{
    int best = -1;
    for (VertexMask f : complex.facet_masks()) {
        best = std::max(best, popcount(f) - 1);
    }
    return best;
}

bool is_pure(const LabeledComplex& complex)
{
    const auto& fs = complex.facet_masks();
    return std::all_of(fs.begin(), fs.end(),
                       [&](VertexMask f) { return popcount(f) == popcount(fs.front()); });
}

LabeledComplex k_skeleton(const LabeledComplex& complex, int k)
{
    const int dim = dimension(complex);
    if (k < 0 || k > dim) {
        throw Error("skeleton dimension " + std::to_string(k) + " outside [0, " +
                    std::to_string(dim) + "]");
    }
    std::vector<VertexMask> kfaces;
    for (VertexMask f : faces(complex)) {
        if (popcount(f) == k + 1) {
            kfaces.push_back(f);
        }
    }
    return LabeledComplex::from_masks(complex.vertices(), kfaces);
}

std::vector<VertexMask> minimal_nonfaces(const LabeledComplex& complex)
{
    if (complex.is_void()) {
        return {0};
    }
    const std::size_t n = complex.num_vertices();
    std::set<VertexMask> found;
    for (VertexMask face : faces(complex)) {
        for (std::size_t v = 0; v < n; ++v) {
            if ((face & bit(v)) != 0) {
                continue;
            }
            const VertexMask s = face | bit(v);
            if (found.count(s) != 0 || complex.contains_face(s)) {
                continue;
            }
            bool minimal = true;
            for (VertexMask rest = s; rest != 0; rest &= rest - 1) {
                const VertexMask u = rest & (~rest + 1);
                if (!complex.contains_face(s & ~u)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                found.insert(s);
            }
        }
    }
    std::vector<VertexMask> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), index_sequence_less);
    return out;
}

SquareFreeIdeal facet_ideal(const LabeledComplex& complex)
{
    return SquareFreeIdeal::from_masks(complex.vertices(), complex.facet_masks());
}

SquareFreeIdeal sr_ideal(const LabeledComplex& complex)
{
    return SquareFreeIdeal::from_masks(complex.vertices(), minimal_nonfaces(complex));
}

LabeledComplex facet_complex(const SquareFreeIdeal& ideal)
{
    return LabeledComplex::from_masks(ideal.variables(), ideal.generator_masks());
}

std::vector<VertexMask> maximal_avoiding_sets(std::size_t universe,
                                              const std::vector<VertexMask>& forbidden)
{
    if (universe > kMaxVertices) {
        throw Error("universe too large");
    }
    std::vector<std::vector<VertexMask>> by_vertex(universe);
    for (VertexMask f : forbidden) {
        if (f == 0) {
            return {};
        }
        for (VertexMask rest = f; rest != 0; rest &= rest - 1) {
            by_vertex[static_cast<std::size_t>(__builtin_ctzll(rest))].push_back(f);
        }
    }
    auto can_add = [&](VertexMask s, std::size_t v) {
        const VertexMask t = s | bit(v);
        return std::none_of(by_vertex[v].begin(), by_vertex[v].end(),
                            [t](VertexMask f) { return is_subset(f, t); });
    };
    std::vector<VertexMask> out;
    // include/exclude search; an excluded vertex must end up blocked
    auto rec = [&](auto&& self, std::size_t v, VertexMask s, VertexMask excluded) -> void {
        if (v == universe) {
            for (VertexMask rest = excluded; rest != 0; rest &= rest - 1) {
                if (can_add(s, static_cast<std::size_t>(__builtin_ctzll(rest)))) {
                    return;
                }
            }
            out.push_back(s);
            return;
        }
        if (can_add(s, v)) {
            self(self, v + 1, s | bit(v), excluded);
        }
        self(self, v + 1, s, excluded | bit(v));
    };
    rec(rec, 0, 0, 0);
    std::sort(out.begin(), out.end(), index_sequence_less);
    return out;
}

LabeledComplex sr_complex(const SquareFreeIdeal& ideal)
{
    if (ideal.is_unit()) {
        return LabeledComplex::void_complex();
    }
    return LabeledComplex::from_masks(
        ideal.variables(),
        maximal_avoiding_sets(ideal.variables().size(), ideal.generator_masks()));
}

bool is_flag(const LabeledComplex& complex)
{
    const auto nf = minimal_nonfaces(complex);
    return std::all_of(nf.begin(), nf.end(), [](VertexMask m) { return popcount(m) == 2; });
}

bool is_simplex(const LabeledComplex& complex)
{
    return !complex.is_void() && complex.facet_masks().size() == 1;
}

bool has_isolated_vertex(const LabeledComplex& complex)
{
    const auto& fs = complex.facet_masks();
    return std::any_of(fs.begin(), fs.end(), [](VertexMask f) { return popcount(f) == 1; });
}

LabeledComplex independence_complex(const LabeledGraph& graph)
{
    std::vector<VertexMask> edges;
    auto index = [&](const std::string& name) {
        for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
            if (graph.vertices[i].name == name) {
                return i;
            }
        }
        throw Error("edge endpoint '" + name + "' is not a graph vertex");
    };
    for (const auto& [u, v] : graph.edges) {
        const auto iu = index(u);
        const auto iv = index(v);
        if (iu == iv) {
            throw Error("graph has a loop at '" + u + "'");
        }
        edges.push_back(bit(iu) | bit(iv));
    }
    return LabeledComplex::from_masks(graph.vertices,
                                      maximal_avoiding_sets(graph.vertices.size(), edges));
}

namespace {

struct IsoSearch {
    const LabeledComplex& a;
    const LabeledComplex& b;
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> order;
    std::vector<std::size_t> image;
    std::vector<bool> used;

    VertexMask map_mask(VertexMask m) const
    {
        VertexMask out = 0;
        for (; m != 0; m &= m - 1) {
            out |= bit(image[static_cast<std::size_t>(__builtin_ctzll(m))]);
        }
        return out;
    }

    bool consistent(VertexMask mapped_a, VertexMask mapped_b) const
    {
        for (VertexMask f : a.facet_masks()) {
            const VertexMask part_image = map_mask(f & mapped_a);
            const bool ok = std::any_of(
                b.facet_masks().begin(), b.facet_masks().end(), [&](VertexMask g) {
                    return popcount(g) == popcount(f) && (g & mapped_b) == part_image;
                });
            if (!ok) {
                return false;
            }
        }
        return true;
    }

    bool run(std::size_t depth, VertexMask mapped_a, VertexMask mapped_b)
    {
        if (depth == order.size()) {
            std::vector<VertexMask> mapped;
            for (VertexMask f : a.facet_masks()) {
                mapped.push_back(map_mask(f));
            }
            std::sort(mapped.begin(), mapped.end(), index_sequence_less);
            return mapped == b.facet_masks();
        }
        const std::size_t v = order[depth];
        for (std::size_t w : candidates[v]) {
            if (used[w]) {
                continue;
            }
            used[w] = true;
            image[v] = w;
            if (consistent(mapped_a | bit(v), mapped_b | bit(w)) &&
                run(depth + 1, mapped_a | bit(v), mapped_b | bit(w))) {
                return true;
            }
            used[w] = false;
        }
        return false;
    }
};

std::vector<int> facet_size_signature(const LabeledComplex& c, std::size_t v)
{
    std::vector<int> sig;
    for (VertexMask f : c.facet_masks()) {
        if ((f & bit(v)) != 0) {
            sig.push_back(popcount(f));
        }
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

} // namespace

std::optional<std::vector<std::size_t>> are_isomorphic(const LabeledComplex& a,
                                                       const LabeledComplex& b)
{
    if (a.is_void() != b.is_void() || a.num_vertices() != b.num_vertices() ||
        a.facet_masks().size() != b.facet_masks().size()) {
        return std::nullopt;
    }
    if (popcount(a.part_mask(Player::Left)) != popcount(b.part_mask(Player::Left))) {
        return std::nullopt;
    }
    auto sizes = [](const LabeledComplex& c) {
        std::vector<int> s;
        for (VertexMask f : c.facet_masks()) {
            s.push_back(popcount(f));
        }
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(a) != sizes(b)) {
        return std::nullopt;
    }
    const std::size_t n = a.num_vertices();
    IsoSearch search{a, b, std::vector<std::vector<std::size_t>>(n), {}, std::vector<std::size_t>(n),
                     std::vector<bool>(n, false)};
    for (std::size_t v = 0; v < n; ++v) {
        const auto sig = facet_size_signature(a, v);
        for (std::size_t w = 0; w < n; ++w) {
            if (a.vertices()[v].part == b.vertices()[w].part && facet_size_signature(b, w) == sig) {
                search.candidates[v].push_back(w);
            }
        }
        if (search.candidates[v].empty()) {
            return std::nullopt;
        }
    }
    search.order.resize(n);
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(), [&](std::size_t x, std::size_t y) {
        return search.candidates[x].size() < search.candidates[y].size();
    });
    if (!search.run(0, 0, 0)) {
        return std::nullopt;
    }
    return search.image;
}

LabeledComplex rename(const LabeledComplex& complex, const std::map<std::string, std::string>& names)
{
    if (complex.is_void()) {
        return complex;
    }
    std::vector<Vertex> renamed = complex.vertices();
    for (auto& v : renamed) {
        if (auto it = names.find(v.name); it != names.end()) {
            v.name = it->second;
        }
    }
    return LabeledComplex::from_masks(renamed, complex.facet_masks());
}

std::string to_string(const LabeledComplex& complex)
{
    if (complex.is_void()) {
        return "void";
    }
    std::ostringstream out;
    out << '<';
    bool first = true;
    for (const auto& f : complex.facets()) {
        if (!first) {
            out << ", ";
        }
        first = false;
        out << (f.empty() ? std::string("{}") : concat_names(f));
    }
    out << '>';
    return out.str();
}

std::string to_string(const SquareFreeIdeal& ideal)
{
    if (ideal.is_zero()) {
        return "(0)";
    }
    if (ideal.is_unit()) {
        return "(1)";
    }
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (const auto& g : ideal.generators()) {
        if (!first) {
            out << ", ";
        }
        first = false;
        out << concat_names(g);
    }
    out << ')';
    return out.str();
}

} // namespace spg
