#include <charconv>

#include "matchtoric/graph.hpp"

namespace matchtoric {

namespace {

SimpleGraph wheel(int d) {
    if (d < 4) throw invalid_input("wheel needs at least 4 vertices");
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < d - 1; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(1, d - 1);
    for (int v = 1; v < d; ++v) es.emplace_back(v, d);
    return SimpleGraph(d, std::move(es));
}

SimpleGraph complete(int d) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) es.emplace_back(i, j);
    return SimpleGraph(d, std::move(es));
}

SimpleGraph complete_bipartite(int m, int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) es.emplace_back(i, m + j);
    return SimpleGraph(m + n, std::move(es));
}

SimpleGraph two_apex_fan(int n) {  // K_{1,1,n}: apexes 1,2 plus n middles
    if (n < 1) throw invalid_input("K11n needs n >= 1");
    std::vector<std::pair<int, int>> es{{1, 2}};
    for (int j = 3; j <= n + 2; ++j) {
        es.emplace_back(1, j);
        es.emplace_back(2, j);
    }
    return SimpleGraph(n + 2, std::move(es));
}

SimpleGraph cycle(int d) {
    if (d < 3) throw invalid_input("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < d; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(1, d);
    return SimpleGraph(d, std::move(es));
}

SimpleGraph path(int d) {
    if (d < 1) throw invalid_input("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < d; ++v) es.emplace_back(v, v + 1);
    return SimpleGraph(d, std::move(es));
}

// Wheel on 5 vertices with hub 5; this exact edge order is the reference
// frame for the bundled non-equivalent coloring pair, so it is pinned.
SimpleGraph g1() {
    return SimpleGraph(5, {{1, 2}, {2, 4}, {3, 4}, {1, 3}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
}

int parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw invalid_input("bad number in graph name");
    return v;
}

}  // namespace

SimpleGraph named_graph(std::string_view name) {
    if (name == "G1") return g1();
    if (name == "G2")
        return SimpleGraph(
            6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 5}, {4, 5}, {5, 6}});
    if (name == "G3")
        return SimpleGraph(7, {{1, 2},
                               {1, 3},
                               {2, 3},
                               {2, 4},
                               {2, 5},
                               {3, 7},
                               {3, 6},
                               {4, 5},
                               {6, 7},
                               {5, 6}});
    if (name == "G4")
        return SimpleGraph(
            7,
            {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {2, 7}, {5, 7}, {3, 7}, {6, 7}});
    if (name == "G5")
        return SimpleGraph(
            7,
            {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {2, 6}, {3, 5}, {1, 7}, {4, 7}});
    if (name == "G6")
        return SimpleGraph(
            7,
            {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {2, 5}, {3, 6}, {1, 7}, {4, 7}});
    if (name == "G7") return odd_subdivision(g1(), {1, 1, 1, 1, 3, 1, 1, 1});
    if (name == "G8") return odd_subdivision(g1(), {3, 1, 1, 1, 1, 1, 1, 1});
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (name.size() >= 2 && name[0] == 'W') return wheel(parse_int(name.substr(1)));
    if (name.size() >= 4 && name.substr(0, 3) == "K11") return two_apex_fan(parse_int(name.substr(3)));
    if (name.size() == 3 && name[0] == 'K' && digit(name[1]) && digit(name[2]))
        return complete_bipartite(name[1] - '0', name[2] - '0');
    if (name.size() == 2 && name[0] == 'K' && digit(name[1])) return complete(name[1] - '0');
    if (name.size() >= 2 && name[0] == 'C') return cycle(parse_int(name.substr(1)));
    if (name.size() >= 2 && name[0] == 'P') return path(parse_int(name.substr(1)));
    throw invalid_input("unknown graph name: " + std::string(name));
}

}  // namespace matchtoric
