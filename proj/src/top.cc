#include "omega/top.hh"

#include <algorithm>
#include <functional>

namespace omega {

std::vector<std::vector<int>> MuRMatrix::r_matrix() const {
    std::vector<std::vector<int>> out;
    for (const auto& row : rows) {
        out.emplace_back();
        for (const MatrixEntry& e : row) out.back().push_back(e.r);
    }
    return out;
}

std::vector<std::vector<int>> MuRMatrix::h_matrix() const {
    std::vector<std::vector<int>> out;
    for (const auto& row : rows) {
        out.emplace_back();
        for (const MatrixEntry& e : row) out.back().push_back(e.index);
    }
    return out;
}

MuRMatrix mu_r_matrix(const std::vector<Rank>& level_rank, int mu) {
    MuRMatrix m;
    std::size_t width = static_cast<std::size_t>(std::max(mu, 0));
    for (const Rank& rank : level_rank) {
        std::vector<MatrixEntry> row;
        for (const GcRank& x : rank)
            if (x.odd()) row.push_back({(x.r + 1) / 2, x.index});
        width = std::max(width, row.size());
        m.rows.push_back(std::move(row));
    }
    for (auto& row : m.rows) row.resize(width, MatrixEntry{1, 0});
    return m;
}

MuRMatrix mu_r_matrix(const LevelRanking& level_rank, int mu) { return mu_r_matrix(level_rank.ranks, mu); }

std::size_t TopTree::leaf_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [](const Node& x) { return x.children.empty(); }));
}

int TopTree::height() const {
    int h = 0;
    for (const Node& x : nodes) h = std::max(h, x.depth);
    return h;
}

std::string TopTree::format() const {
    std::function<std::string(int)> walk = [&](int id) {
        const Node& x = nodes[id];
        std::string out = "{";
        for (std::size_t i = 0; i < x.label.size(); ++i) out += (i ? "," : "") + std::to_string(x.label[i]);
        out += "}";
        if (!x.children.empty()) {
            out += "(";
            for (std::size_t i = 0; i < x.children.size(); ++i) out += (i ? "," : "") + walk(x.children[i]);
            out += ")";
        }
        return out;
    };
    return nodes.empty() ? std::string() : walk(0);
}

TopResult top_from_r_matrix(const std::vector<std::vector<int>>& r_matrix, int n, int mu) {
    if (static_cast<int>(r_matrix.size()) != n)
        throw Error(ErrorKind::InvalidArgs, "matrix has " + std::to_string(r_matrix.size()) + " rows, expected " +
                                                std::to_string(n));
    for (const auto& row : r_matrix) {
        if (static_cast<int>(row.size()) < mu) throw Error(ErrorKind::InvalidArgs, "matrix row shorter than mu");
        for (int x : row)
            if (x < 1) throw Error(ErrorKind::InvalidArgs, "matrix entries must be at least 1");
    }
    TopResult result;
    TopTree& tree = result.tree;
    StateList all;
    for (State q = 0; q < n; ++q) all.push_back(q);
    tree.nodes.push_back({all, 0, {}});
    std::vector<int> frontier{0};
    for (int column = 0; column < mu; ++column) {
        std::vector<int> next;
        for (int id : frontier) {
            const StateList cell = tree.nodes[id].label;
            int widest = 0;
            for (State q : cell) widest = std::max(widest, r_matrix[q][column]);
            for (int rank = 1; rank <= widest; ++rank) {
                StateList sub;
                for (State q : cell)
                    if (r_matrix[q][column] == rank) sub.push_back(q);
                const int child = static_cast<int>(tree.nodes.size());
                tree.nodes.push_back({sub, column + 1, {}});
                tree.nodes[id].children.push_back(child);
                if (!sub.empty()) next.push_back(child);
            }
        }
        frontier = std::move(next);
    }
    const std::size_t leaves = tree.leaf_count();
    result.is_top = static_cast<int>(leaves) <= n;
    if (!result.is_top)
        result.reason = "tree has " + std::to_string(leaves) + " leaves, more than " + std::to_string(n);
    return result;
}

namespace {

BigInt binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    BigInt out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

}  // namespace

BigInt narayana(int e, int l) {
    if (e < 1 || l < 1) throw Error(ErrorKind::InvalidArgs, "narayana needs e, l >= 1");
    return binomial(e, l) * binomial(e, l - 1) / e;
}

BigInt brute_force_tree_count(int e, int l, int cap) {
    if (e > cap) throw Error(ErrorKind::TooLarge, "tree enumeration capped at " + std::to_string(cap) + " edges");
    if (e < 0) throw Error(ErrorKind::InvalidArgs, "edge count must be non-negative");
    // An ordered tree with e edges is a balanced word of e opening and e
    // closing steps; its leaves are the opening steps closed immediately.
    BigInt count = 0;
    std::string word;
    std::function<void(int, int)> extend = [&](int open, int close) {
        if (close == e) {
            int leaves = 0;
            for (std::size_t i = 0; i + 1 < word.size(); ++i) leaves += word[i] == '(' && word[i + 1] == ')';
            if (leaves == l) ++count;
            return;
        }
        if (open < e) {
            word.push_back('(');
            extend(open + 1, close);
            word.pop_back();
        }
        if (close < open) {
            word.push_back(')');
            extend(open, close + 1);
            word.pop_back();
        }
    };
    extend(0, 0);
    return count;
}

BigInt top_bound(int n, int k) {
    if (n < 1 || k < 1) throw Error(ErrorKind::InvalidArgs, "top_bound needs n, k >= 1");
    const int mu = std::min(n, k);
    BigInt total = 0;
    for (int e = 1; e <= n * mu; ++e)
        for (int l = 1; l <= std::min(n, e); ++l) total += narayana(e, l) * boost::multiprecision::pow(BigInt(l), n);
    return total;
}

}  // namespace omega
