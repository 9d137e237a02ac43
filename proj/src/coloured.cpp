#include "linord/coloured.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace linord {

Verdict coloured_l_convex_embeds(const ClassId& c, const ColouredFinite& s, const ColouredFinite& t) {
    const auto& a = s.colours;
    const auto& b = t.colours;
    const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
    if (n == 0) return Verdict::holds("coloured-dp", "empty source");
    // lcp[i][j]: length of the common run a[i..] = b[j..]
    std::vector<std::vector<int>> lcp(n + 1, std::vector<int>(m + 1, 0));
    for (int i = n - 1; i >= 0; --i)
        for (int j = m - 1; j >= 0; --j) lcp[i][j] = a[i] == b[j] ? lcp[i + 1][j + 1] + 1 : 0;

    // best[i][j]: fewest pieces covering a[0..i) with images inside b[0..j)
    constexpr int inf = std::numeric_limits<int>::max() / 2;
    std::vector<std::vector<int>> best(n + 1, std::vector<int>(m + 1, inf));
    struct Back {
        int i = -1, j = -1, start = -1;
    };
    std::vector<std::vector<Back>> back(n + 1, std::vector<Back>(m + 1));
    for (int j = 0; j <= m; ++j) best[0][j] = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            if (best[i][j] >= inf) continue;
            for (int j2 = j; j2 < m; ++j2)
                for (int len = 1; len <= lcp[i][j2]; ++len) {
                    const int ni = i + len, nj = j2 + len;
                    if (best[i][j] + 1 < best[ni][nj]) {
                        best[ni][nj] = best[i][j] + 1;
                        back[ni][nj] = {i, j, j2};
                    }
                }
        }
    int pieces = inf, end = -1;
    for (int j = 0; j <= m; ++j)
        if (best[n][j] < pieces) pieces = best[n][j], end = j;
    if (pieces >= inf) return Verdict::fails("coloured-dp", "no colour-preserving embedding exists");

    const Verdict mem = member(c, Term::fin(static_cast<std::uint64_t>(pieces)));
    const std::string what = std::to_string(pieces) + " convex pieces needed";
    if (!mem.is_holds()) return Verdict::fails("coloured-dp", what + ", and that chain is not in " + c.str());

    Witness w{Term::fin(static_cast<std::uint64_t>(pieces)), {}, std::vector<std::int64_t>(n), {}, {}};
    for (int i = n, j = end; i > 0;) {
        const Back bk = back[i][j];
        const int len = i - bk.i;
        w.pieces.push_back({Piece::Kind::Block, "[" + std::to_string(bk.i) + "," + std::to_string(i) + ")",
                            "[" + std::to_string(bk.start) + "," + std::to_string(bk.start + len) + ")",
                            std::to_string(len), std::to_string(len)});
        for (int k = 0; k < len; ++k) (*w.embedding)[bk.i + k] = bk.start + k;
        i = bk.i;
        j = bk.j;
    }
    std::reverse(w.pieces.begin(), w.pieces.end());
    return Verdict::holds("coloured-dp", what, std::move(w));
}

ColouredFinite parse_colours(std::string_view text) {
    ColouredFinite out;
    std::string tok;
    const auto flush = [&] {
        if (tok.empty()) return;
        if (tok.size() == 1 && std::islower(static_cast<unsigned char>(tok[0]))) {
            out.colours.push_back(tok[0] - 'a' + 1);
        } else if (std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
            out.colours.push_back(std::stoi(tok));
        } else {
            throw std::invalid_argument("bad colour '" + tok + "'");
        }
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == '[' || ch == ']' || std::isspace(static_cast<unsigned char>(ch))) flush();
        else tok += ch;
    }
    flush();
    if (out.colours.empty()) throw std::invalid_argument("empty coloured order");
    return out;
}

std::string colours_str(const ColouredFinite& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.colours.size(); ++i) out += (i ? "," : "") + std::to_string(s.colours[i]);
    return out + "]";
}

}  // namespace linord
