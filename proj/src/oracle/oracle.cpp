#include "oracle/oracle.hpp"
#include "verify/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace pdec {

namespace {

long long degenerate_edge_cap(int n, int d) {
    if (n <= d + 1) return (long long)n * (n - 1) / 2;
    return (long long)d * n - (long long)d * (d + 1) / 2;
}

struct Shared {
    const PlaneGraph* g;
    int d, h;
    OracleOptions opt;
    std::vector<std::pair<int, int>> edges;  // branching order
    long long ub_d;

    std::atomic<long long> nodes{0};
    std::atomic<bool> over_budget{false};
    std::atomic<long long> best_prefix{-1};  // smallest feasible prefix index
};

struct Abandoned {};  // unwinds a worker whose prefix can no longer win

class Search {
public:
    Search(Shared& sh, long long prefix_index)
        : sh_(sh), prefix_(prefix_index) {
        int n = sh.g->n;
        hdeg_.assign(n + 1, 0);
        dadj_.assign(n + 1, {});
        cap_total_ = 0;
        for (int v = 1; v <= n; ++v)
            if (sh.g->degree(v) > 0) cap_total_ += sh.h;
        peel_deg_.assign(n + 1, 0);
        peel_seen_.assign(n + 1, 0);
    }

    // returns the witness H-set when this subtree is feasible
    std::optional<std::vector<std::pair<int, int>>> run(int prefix_len) {
        try {
            for (int i = 0; i < prefix_len; ++i) {
                bool to_h = ((prefix_ >> (prefix_len - 1 - i)) & 1) == 0;
                if (!enter(i, to_h)) return std::nullopt;
            }
            if (dfs(prefix_len)) return hset_;
        } catch (const Abandoned&) {
        }
        return std::nullopt;
    }

    long long local_nodes = 0;

private:
    Shared& sh_;
    long long prefix_;
    std::vector<int> hdeg_;
    std::vector<std::vector<int>> dadj_;
    std::vector<std::pair<int, int>> hset_;
    long long d_count_ = 0;
    long long cap_total_ = 0;  // sum over vertices of max(0, h - hdeg)
    std::vector<int> peel_deg_, peel_seen_, peel_queue_;

    bool pruning() const { return !sh_.opt.exhaustive; }

    void bump_node() {
        ++local_nodes;
        if ((local_nodes & 1023) == 0) {
            long long total = sh_.nodes.fetch_add(1024) + 1024;
            if (total > sh_.opt.node_budget) {
                sh_.over_budget.store(true);
                throw BudgetExceeded("search node budget exhausted");
            }
            if (sh_.over_budget.load()) throw BudgetExceeded("search aborted");
            long long best = sh_.best_prefix.load();
            if (best >= 0 && best < prefix_) throw Abandoned{};
        }
    }

    int spare(int v) const { return std::max(0, sh_.h - hdeg_[v]); }

    bool count_cut(int unassigned) const {
        if (d_count_ > sh_.ub_d) return true;
        long long forced = unassigned - cap_total_ / 2;
        return forced > 0 && d_count_ + forced > sh_.ub_d;
    }

    bool peel_ok() {
        int n = sh_.g->n;
        peel_queue_.clear();
        int alive = 0;
        for (int v = 1; v <= n; ++v) {
            peel_deg_[v] = (int)dadj_[v].size();
            peel_seen_[v] = 0;
            if (peel_deg_[v] > 0) ++alive;
            if (peel_deg_[v] > 0 && peel_deg_[v] <= sh_.d) {
                peel_queue_.push_back(v);
                peel_seen_[v] = 1;
            }
        }
        int removed = 0;
        for (size_t qi = 0; qi < peel_queue_.size(); ++qi) {
            int v = peel_queue_[qi];
            ++removed;
            for (int u : dadj_[v]) {
                if (peel_seen_[u]) continue;
                if (--peel_deg_[u] <= sh_.d && peel_deg_[u] >= 0) {
                    peel_seen_[u] = 1;
                    peel_queue_.push_back(u);
                }
            }
        }
        // isolated-in-D vertices never enter the queue; only live ones count
        return removed == alive;
    }

    bool caps_ok() const {
        for (int v = 1; v <= sh_.g->n; ++v)
            if (hdeg_[v] > sh_.h) return false;
        return true;
    }

    bool leaf_feasible() { return caps_ok() && peel_ok(); }

    // applies edge idx to H or D with the active prunes; false = cut here
    bool enter(int idx, bool to_h) {
        bump_node();
        auto [u, v] = sh_.edges[idx];
        int unassigned = (int)sh_.edges.size() - idx - 1;
        if (to_h) {
            if (pruning() && sh_.opt.prune_hcap && (spare(u) == 0 || spare(v) == 0))
                return false;
            push_h(u, v);
            if (pruning() && sh_.opt.prune_count && count_cut(unassigned)) {
                pop_h(u, v);
                return false;
            }
            return true;
        }
        push_d(u, v);
        if (pruning() && sh_.opt.prune_count && count_cut(unassigned)) {
            pop_d(u, v);
            return false;
        }
        if (pruning() && sh_.opt.prune_peel && !peel_ok()) {
            pop_d(u, v);
            return false;
        }
        return true;
    }

    void push_h(int u, int v) {
        cap_total_ -= spare(u) + spare(v);
        hdeg_[u]++;
        hdeg_[v]++;
        cap_total_ += spare(u) + spare(v);
        hset_.emplace_back(u, v);
    }
    void pop_h(int u, int v) {
        cap_total_ -= spare(u) + spare(v);
        hdeg_[u]--;
        hdeg_[v]--;
        cap_total_ += spare(u) + spare(v);
        hset_.pop_back();
    }
    void push_d(int u, int v) {
        dadj_[u].push_back(v);
        dadj_[v].push_back(u);
        ++d_count_;
    }
    void pop_d(int u, int v) {
        dadj_[u].pop_back();
        dadj_[v].pop_back();
        --d_count_;
    }

    bool dfs(int idx) {
        if (idx == (int)sh_.edges.size()) {
            bump_node();
            return leaf_feasible();
        }
        if (enter(idx, true)) {
            if (dfs(idx + 1)) return true;
            auto [u, v] = sh_.edges[idx];
            pop_h(u, v);
        }
        if (enter(idx, false)) {
            if (dfs(idx + 1)) return true;
            auto [u, v] = sh_.edges[idx];
            pop_d(u, v);
        }
        return false;
    }
};

std::vector<std::pair<int, int>> branch_order(const PlaneGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= g.n; ++v)
        for (int u : g.rot[v])
            if (v < u) edges.emplace_back(v, u);
    std::stable_sort(edges.begin(), edges.end(),
                     [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                         int da = std::max(g.degree(a.first), g.degree(a.second));
                         int db = std::max(g.degree(b.first), g.degree(b.second));
                         if (da != db) return da > db;
                         return a < b;
                     });
    return edges;
}

DecompPair build_witness(const PlaneGraph& g, int d, int h,
                         const std::vector<std::pair<int, int>>& hset) {
    PlaneGraph dpart;
    dpart.n = g.n;
    dpart.rot.assign(g.n + 1, {});
    DecompPair w;
    for (auto [u, v] : hset) w.hedges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(w.hedges.begin(), w.hedges.end());
    auto is_h = [&](int u, int v) {
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        return std::binary_search(w.hedges.begin(), w.hedges.end(), key);
    };
    for (int v = 1; v <= g.n; ++v)
        for (int u : g.rot[v])
            if (!is_h(u, v)) dpart.rot[v].push_back(u);
    OrderingResult ord = degeneracy_ordering(dpart, d);
    PDEC_CHECK(ord.found, "accepted leaf is not peelable");
    w.arcs = ordering_to_orientation(dpart, ord.order);
    w.canonicalize();
    PDEC_CHECK(check_dh(g, w, d, h).ok(), "oracle witness failed verification");
    return w;
}

}  // namespace

OracleResult exact_decide(const PlaneGraph& g, int d, int h, const OracleOptions& opt) {
    PDEC_CHECK(d >= 0 && h >= 0, "negative degree bounds");
    Shared sh;
    sh.g = &g;
    sh.d = d;
    sh.h = h;
    sh.opt = opt;
    sh.edges = branch_order(g);
    sh.ub_d = degenerate_edge_cap(g.n, d);
    int m = (int)sh.edges.size();
    if (opt.exhaustive && m > opt.exhaustive_edge_cap)
        throw BudgetExceeded("too many edges for exhaustive enumeration");

    OracleResult res;
    if (m == 0) {
        res.feasible = true;
        res.nodes = 1;
        return res;
    }

    int workers = std::max(1, opt.workers);
    if (workers == 1) {
        Search s(sh, 0);
        auto hit = s.run(0);
        res.nodes = s.local_nodes;
        if (hit) {
            res.feasible = true;
            res.witness = build_witness(g, d, h, *hit);
        }
        return res;
    }

    int prefix_len = 1;
    while ((1 << prefix_len) < 4 * workers && prefix_len < std::min(m, 12))
        ++prefix_len;
    long long prefixes = 1LL << prefix_len;

    std::mutex mu;
    std::vector<std::pair<long long, std::vector<std::pair<int, int>>>> found;
    long long nodes_sum = 0;
    std::exception_ptr first_error;

    auto body = [&](int w) {
        try {
            for (long long i = w; i < prefixes; i += workers) {
                long long best = sh.best_prefix.load();
                if (best >= 0 && best < i) continue;
                if (sh.over_budget.load()) break;
                Search s(sh, i);
                auto hit = s.run(prefix_len);
                std::lock_guard<std::mutex> lk(mu);
                nodes_sum += s.local_nodes;
                if (hit) {
                    found.emplace_back(i, std::move(*hit));
                    long long cur = sh.best_prefix.load();
                    while ((cur < 0 || i < cur) &&
                           !sh.best_prefix.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(mu);
            if (!first_error) first_error = std::current_exception();
            sh.over_budget.store(true);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    res.nodes = nodes_sum;
    if (!found.empty()) {
        auto best = std::min_element(found.begin(), found.end(),
                                     [](const auto& a, const auto& b) {
                                         return a.first < b.first;
                                     });
        res.feasible = true;
        res.witness = build_witness(g, d, h, best->second);
    }
    return res;
}

MinHResult min_h(const PlaneGraph& g, int d, const OracleOptions& opt) {
    int hmax = 0;
    for (int v = 1; v <= g.n; ++v) hmax = std::max(hmax, g.degree(v));
    MinHResult out;
    long long last_refute = 0;
    for (int h = 0; h <= hmax; ++h) {
        OracleResult r = exact_decide(g, d, h, opt);
        out.nodes_total += r.nodes;
        if (r.feasible) {
            out.h = h;
            out.witness = r.witness;
            out.nodes_refute = last_refute;
            return out;
        }
        last_refute = r.nodes;
    }
    PDEC_CHECK(false, "assigning every edge to H is always feasible");
    return out;
}

} // namespace pdec
