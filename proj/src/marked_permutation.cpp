#include "rauzylab/marked_permutation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rauzylab {

namespace {
bool is_bijection(const std::vector<int>& v) {
    int m = static_cast<int>(v.size());
    std::vector<bool> seen(m + 1, false);
    for (int x : v) {
        if (x < 1 || x > m || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}
}  // namespace

MarkedPermutation::MarkedPermutation(std::vector<int> v0, std::vector<int> v1)
    : m(static_cast<int>(v0.size())), nu0(std::move(v0)), nu1(std::move(v1)) {
    if (m < 2) throw config_error("marked permutation needs m >= 2");
    if (static_cast<int>(nu1.size()) != m)
        throw config_error("nu0 and nu1 must have the same length");
    if (!is_bijection(nu0) || !is_bijection(nu1))
        throw config_error("nu0 and nu1 must be bijections of {1..m}");
}

int MarkedPermutation::nu0_pos_of(int name) const {
    for (int p = 1; p <= m; ++p)
        if (nu0[p - 1] == name) return p;
    throw invariant_error("name not present in nu0");
}

int MarkedPermutation::nu1_pos_of(int name) const {
    for (int p = 1; p <= m; ++p)
        if (nu1[p - 1] == name) return p;
    throw invariant_error("name not present in nu1");
}

std::vector<int> derived_permutation(const MarkedPermutation& mp) {
    std::vector<int> inv1(mp.m + 1, 0);
    for (int p = 1; p <= mp.m; ++p) inv1[mp.nu1[p - 1]] = p;
    std::vector<int> pi(mp.m);
    for (int j = 0; j < mp.m; ++j) pi[j] = inv1[mp.nu0[j]];
    return pi;
}

bool irreducible(const std::vector<int>& pi) {
    int m = static_cast<int>(pi.size());
    int max_seen = 0;
    for (int k = 1; k < m; ++k) {
        max_seen = std::max(max_seen, pi[k - 1]);
        if (max_seen == k) return false;
    }
    return true;
}

void require_irreducible(const MarkedPermutation& mp) {
    if (!irreducible(derived_permutation(mp)))
        throw config_error("marked permutation is reducible: " +
                           format_marked_permutation(mp));
}

namespace {
// Remove `name` from the ordering and reinsert it immediately after the entry
// currently at position `after_pos` (positions counted before removal).
std::vector<int> reinsert_after(const std::vector<int>& order, int name, int after_name) {
    std::vector<int> out;
    out.reserve(order.size());
    for (int x : order)
        if (x != name) {
            out.push_back(x);
            if (x == after_name) out.push_back(name);
        }
    return out;
}
}  // namespace

MarkedPermutation op_a(const MarkedPermutation& mp) {
    int moved = mp.nu0_at(mp.m);    // name losing its interval at the end
    int anchor = mp.nu1_at(mp.m);   // name it lands after
    if (moved == anchor)
        throw invariant_error("op_a undefined: nu0(m) == nu1(m) (reducible state)");
    return MarkedPermutation(reinsert_after(mp.nu0, moved, anchor), mp.nu1);
}

MarkedPermutation op_b(const MarkedPermutation& mp) {
    int moved = mp.nu1_at(mp.m);
    int anchor = mp.nu0_at(mp.m);
    if (moved == anchor)
        throw invariant_error("op_b undefined: nu0(m) == nu1(m) (reducible state)");
    return MarkedPermutation(mp.nu0, reinsert_after(mp.nu1, moved, anchor));
}

MarkedPermutation op_a_misindexed(const MarkedPermutation& mp) {
    int k = mp.nu1_pos_of(mp.m);    // wrong anchor: position of the name m in nu1
    std::vector<int> out(mp.m);
    for (int i = 1; i <= mp.m; ++i) {
        int src = (i <= k) ? i : (i == k + 1 ? mp.m : i - 1);
        out[i - 1] = mp.nu0[src - 1];
    }
    return MarkedPermutation(out, mp.nu1);
}

RauzyDiagram extended_rauzy_class(const MarkedPermutation& start) {
    require_irreducible(start);
    std::map<MarkedPermutation, int> index;
    std::deque<MarkedPermutation> queue{start};
    index[start] = 0;
    std::vector<MarkedPermutation> order{start};
    while (!queue.empty()) {
        MarkedPermutation mp = queue.front();
        queue.pop_front();
        for (const MarkedPermutation& t : {op_a(mp), op_b(mp)}) {
            if (!irreducible(derived_permutation(t)))
                throw invariant_error("Rauzy operation left the irreducible class");
            if (index.emplace(t, static_cast<int>(order.size())).second) {
                order.push_back(t);
                queue.push_back(t);
            }
        }
    }

    RauzyDiagram d;
    d.vertices = order;
    std::sort(d.vertices.begin(), d.vertices.end());
    std::map<MarkedPermutation, int> rank;
    for (size_t i = 0; i < d.vertices.size(); ++i) rank[d.vertices[i]] = static_cast<int>(i);
    for (const MarkedPermutation& v : d.vertices) {
        d.edges.push_back({rank[v], 'a', rank[op_a(v)]});
        d.edges.push_back({rank[v], 'b', rank[op_b(v)]});
    }
    return d;
}

MarkedPermutation parse_marked_permutation(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos)
        throw config_error("expected 'nu0|nu1' digit syntax, got: " + text);
    auto parse_side = [&](const std::string& side) {
        std::vector<int> v;
        for (char c : side) {
            if (c < '1' || c > '9')
                throw config_error("permutation digits must be 1..9: " + text);
            v.push_back(c - '0');
        }
        return v;
    };
    return MarkedPermutation(parse_side(text.substr(0, bar)),
                             parse_side(text.substr(bar + 1)));
}

std::string format_marked_permutation(const MarkedPermutation& mp) {
    std::string s;
    for (int x : mp.nu0) s += static_cast<char>('0' + x);
    s += '|';
    for (int x : mp.nu1) s += static_cast<char>('0' + x);
    return s;
}

std::string diagram_to_dot(const RauzyDiagram& d) {
    std::ostringstream os;
    os << "digraph rauzy {\n";
    for (size_t i = 0; i < d.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << format_marked_permutation(d.vertices[i])
           << "\"];\n";
    for (const RauzyEdge& e : d.edges)
        os << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.label
           << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string diagram_to_json(const RauzyDiagram& d) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const MarkedPermutation& v : d.vertices)
        j["vertices"].push_back({{"nu0", v.nu0}, {"nu1", v.nu1},
                                 {"label", format_marked_permutation(v)}});
    j["edges"] = nlohmann::json::array();
    for (const RauzyEdge& e : d.edges)
        j["edges"].push_back({{"source", e.source},
                              {"label", std::string(1, e.label)},
                              {"target", e.target}});
    return j.dump(2) + "\n";
}

}  // namespace rauzylab
