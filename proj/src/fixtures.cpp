#include "wrep/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "wrep/error.hpp"

namespace wrep {

namespace {

std::vector<std::pair<double, double>> polygon_points(int n) {
    std::vector<std::pair<double, double>> xy;
    for (int i = 0; i < n; ++i) {
        const double a = 2 * std::numbers::pi * i / n;
        xy.emplace_back(std::cos(a), std::sin(a));
    }
    return xy;
}

// Near-triangulation with inner vertex 6 of degree 5.
constexpr std::string_view kFig1Mid = R"(# 7 vertices, hub 6 of odd degree inside the pentagon 1..5
7 13
1 2
2 3
3 4
4 5
1 5
1 6
2 6
3 6
4 6
5 6
2 7
3 7
4 7
coord 1: 8 0
coord 2: 22 0
coord 3: 30 15
coord 4: 15 25
coord 5: 0 15
coord 6: 15 10
coord 7: 40 15
)";

// Inner vertices 2, 3, 4 all of degree 4.
constexpr std::string_view kFig1Right = R"(# 7 vertices, v = 3, w = 7
7 14
1 2
1 3
1 4
1 6
1 7
2 3
2 5
2 6
3 4
3 5
4 5
4 7
5 6
5 7
coord 1: 1 0
coord 2: 0 1
coord 3: 1 1
coord 4: 2 1
coord 5: 1 2
coord 6: -1 1
coord 7: 3 1
)";

constexpr std::string_view kFig2 = R"(# 13 unit squares, each split by one diagonal
.b.b
baba
ab.b
b..a
ab..
diag: 0 0 1 1
diag: 2 0 1 1
diag: 1 1 0 2
diag: 3 1 4 2
diag: 0 2 1 3
diag: 2 2 1 3
diag: 4 2 3 3
diag: 0 3 1 4
diag: 2 3 1 4
diag: 3 3 2 4
diag: 4 3 3 4
diag: 1 4 2 5
diag: 3 4 4 5
)";

constexpr std::string_view kFig3 = R"(# n-omino tiles; the inner vertex (2, 1) has degree 7
f...
ffgh
ade.
abcc
diag: 0 0 1 1
diag: 0 0 1 2
diag: 0 1 1 2
diag: 1 1 2 0
diag: 2 1 3 0
diag: 3 1 4 0
diag: 2 1 4 0
diag: 1 1 2 2
diag: 2 1 3 2
diag: 0 2 1 3
diag: 1 2 2 3
diag: 0 2 2 3
diag: 0 2 1 4
diag: 0 3 1 4
diag: 2 2 3 3
diag: 3 2 4 3
)";

constexpr std::string_view kFig4 = R"(# L-tromino plus a square; contains K4
ab
aa
diag: 0 0 1 1
diag: 0 1 1 2
diag: 1 0 2 1
diag: 0 0 1 2
diag: 0 0 2 1
diag: 1 2 2 1
)";

constexpr std::string_view kDonut = R"(# 3x3 ring of unit squares around an empty centre
aba
b.b
aba
diag: 0 0 1 1
diag: 1 0 2 1
diag: 2 0 3 1
diag: 0 1 1 2
diag: 2 1 3 2
diag: 0 2 1 3
diag: 1 2 2 3
diag: 2 2 3 3
)";

}  // namespace

Embedding wheel_embedding(int n) {
    if (n < 3) throw invalid_parameter("a wheel needs a rim of at least 3 vertices");
    auto xy = polygon_points(n);
    xy.emplace_back(0.0, 0.0);
    return Embedding::from_coordinates(make_wheel(n), xy);
}

Embedding cycle_embedding(int n) {
    if (n < 3) throw invalid_parameter("a cycle needs at least 3 vertices");
    return Embedding::from_coordinates(make_cycle(n), polygon_points(n));
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"fig1-mid", "fig1-right", "fig2", "fig3", "fig4", "w4",
                                                "w5",       "w6",         "w7",   "w8",   "w9",   "donut"};
    return names;
}

std::string builtin_fixture(std::string_view name) {
    if (name == "fig1-mid") return std::string(kFig1Mid);
    if (name == "fig1-right") return std::string(kFig1Right);
    if (name == "fig2") return std::string(kFig2);
    if (name == "fig3") return std::string(kFig3);
    if (name == "fig4") return std::string(kFig4);
    if (name == "donut") return std::string(kDonut);
    if (name.size() == 2 && name[0] == 'w' && name[1] >= '4' && name[1] <= '9') {
        const int n = name[1] - '0';
        return "# wheel W" + std::to_string(n) + ", hub " + std::to_string(n + 1) + " inside the rim\n" +
               format_embedding(wheel_embedding(n));
    }
    throw invalid_parameter("unknown fixture '" + std::string(name) + "'");
}

}  // namespace wrep
