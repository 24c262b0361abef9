#include "omega/its.hh"

#include <algorithm>
#include <functional>

namespace omega {

namespace {

void check_indices(const IndexTuple& alpha, const std::vector<StateList>& b) {
    for (int j : alpha) {
        if (j < 1 || j > static_cast<int>(b.size()))
            throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(j) + " not in [1.." +
                                                        std::to_string(b.size()) + "]");
    }
}

}  // namespace

StateList covered_states(const IndexTuple& alpha, const std::vector<StateList>& b) {
    check_indices(alpha, b);
    StateList u;
    for (int j : alpha) u = set_union(u, b[j - 1]);
    return u;
}

std::vector<int> cover(const IndexTuple& alpha, const std::vector<StateList>& b) {
    StateList u = covered_states(alpha, b);
    std::vector<int> out;
    if (alpha.empty()) return out;
    for (int j = 1; j <= static_cast<int>(b.size()); ++j)
        if (is_subset(b[j - 1], u)) out.push_back(j);
    return out;
}

std::vector<int> mini(const IndexTuple& alpha, const std::vector<StateList>& b) {
    StateList u = covered_states(alpha, b);
    std::vector<int> covered = cover(alpha, b);
    std::vector<int> open;
    std::vector<StateList> ext;
    for (int j = 1; j <= static_cast<int>(b.size()); ++j) {
        if (std::binary_search(covered.begin(), covered.end(), j)) continue;
        open.push_back(j);
        ext.push_back(set_union(u, b[j - 1]));
    }
    std::vector<int> out;
    for (std::size_t x = 0; x < open.size(); ++x) {
        bool keep = true;
        for (std::size_t y = 0; y < open.size() && keep; ++y) {
            if (x == y) continue;
            bool strictly_smaller = ext[y].size() < ext[x].size() && is_subset(ext[y], ext[x]);
            bool earlier_tie = open[y] < open[x] && ext[y] == ext[x];
            keep = !strictly_smaller && !earlier_tie;
        }
        if (keep) out.push_back(open[x]);
    }
    return out;
}

std::size_t ItsTree::leaf_count() const {
    std::size_t leaves = 0;
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (nodes[i].children.empty()) ++leaves;
    return leaves;
}

int ItsTree::height() const {
    int h = 0;
    for (const auto& node : nodes) h = std::max(h, static_cast<int>(node.path.size()));
    return h;
}

bool ItsTree::contains(const IndexTuple& path) const {
    return std::any_of(nodes.begin(), nodes.end(), [&](const Node& node) { return node.path == path; });
}

ItsTree build_its(int n, int k, const std::vector<StateList>& b) {
    if (static_cast<int>(b.size()) != k)
        throw Error(ErrorKind::InvalidArgs, "B must list exactly k sets");
    ItsTree tree;
    tree.n = n;
    tree.k = k;
    tree.nodes.push_back({});
    std::function<void(int)> expand = [&](int id) {
        IndexTuple path = tree.nodes[id].path;
        for (int j : mini(path, b)) {
            ItsTree::Node child;
            child.path = path;
            child.path.push_back(j);
            child.parent = id;
            int child_id = static_cast<int>(tree.nodes.size());
            tree.nodes.push_back(std::move(child));
            tree.nodes[id].children.push_back(child_id);
            expand(child_id);
        }
    };
    expand(0);
    return tree;
}

std::size_t its_size_max(int n, int k, std::size_t cap) {
    if (n < 1 || k < 1) throw Error(ErrorKind::InvalidArgs, "n and k must be positive");
    if (n >= 20 || static_cast<std::size_t>(k) * (std::size_t{1} << n) > cap)
        throw Error(ErrorKind::TooLarge, "k * 2^n exceeds the enumeration cap");
    const int universe = 1 << n;
    if (k > universe) throw Error(ErrorKind::InvalidArgs, "no injective B exists for k > 2^n");
    auto to_set = [n](int mask) {
        StateList s;
        for (State q = 0; q < n; ++q)
            if (mask >> q & 1) s.push_back(q);
        return s;
    };
    std::size_t best = 0;
    std::vector<int> pick(k);
    std::function<void(int, int)> choose = [&](int pos, int from) {
        if (pos == k) {
            std::vector<StateList> b;
            for (int m : pick) b.push_back(to_set(m));
            best = std::max(best, build_its(n, k, b).size());
            return;
        }
        for (int m = from; m < universe; ++m) {
            pick[pos] = m;
            choose(pos + 1, m + 1);
        }
    };
    choose(0, 0);
    return best;
}

}  // namespace omega
