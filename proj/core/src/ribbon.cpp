#include "jm/ribbon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "jm/errors.hpp"
#include "jm/profile.hpp"

namespace jm {

// ---------------------------------------------------------------------------
// Single paths
// ---------------------------------------------------------------------------

namespace {

void sliding_dfs(int ell, int K, std::vector<int>& heights, std::vector<SlidingPath>& out) {
    int taken = static_cast<int>(heights.size()) - 1;
    int h = heights.back();
    if (taken == ell) {
        if (h == 0) out.push_back(SlidingPath{heights});
        return;
    }
    int remaining = ell - taken - 1;
    for (int next = std::max(0, h - K); next <= h + K; ++next) {
        if (next > remaining * K) break;
        heights.push_back(next);
        sliding_dfs(ell, K, heights, out);
        heights.pop_back();
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i;
        return c;
    }
};

std::vector<int> groups_from_decoration(const Decoration& nu, int n_sites) {
    std::vector<int> groups;
    for (int j = 0; j < static_cast<int>(nu.size()); ++j) {
        if (nu[j] < 1) throw DomainError("decoration blocks must be positive");
        for (int i = 0; i < nu[j]; ++i) groups.push_back(j);
    }
    if (static_cast<int>(groups.size()) != n_sites) throw DomainError("decoration sizes must add up to the number of sites");
    return groups;
}

bool global_before(const StepRef& a, const StepRef& b) {
    return a.site < b.site || (a.site == b.site && a.step < b.step);
}

}  // namespace

std::vector<SlidingPath> enumerate_sliding_paths(int ell, int K) {
    if (ell < 1) throw DomainError("path length must be positive");
    if (K < 0) throw DomainError("jump bound must be nonnegative");
    std::vector<SlidingPath> out;
    std::vector<int> heights{0};
    sliding_dfs(ell, K, heights, out);
    return out;
}

void validate_ribbon_path(const RibbonPath& path) {
    for (const auto& site : path.sites) {
        if (site.heights.size() < 2 || site.heights.front() != 0 || site.heights.back() != 0) {
            throw DomainError("each site path must start and end at height 0");
        }
        for (int h : site.heights) {
            if (h < 0) throw DomainError("heights must be nonnegative");
        }
    }
    std::vector<std::vector<int>> used(path.sites.size());
    for (std::size_t s = 0; s < path.sites.size(); ++s) used[s].assign(static_cast<std::size_t>(path.sites[s].length()), 0);
    for (const auto& [down, up] : path.pairings) {
        for (const StepRef& r : {down, up}) {
            if (r.site < 0 || r.site >= static_cast<int>(path.sites.size()) || r.step < 0 ||
                r.step >= path.sites[r.site].length()) {
                throw DomainError("pairing refers to a step outside the path");
            }
            if (used[r.site][r.step]++) throw DomainError("a step participates in two pairings");
        }
        int kd = path.sites[down.site].step_degree(down.step);
        int ku = path.sites[up.site].step_degree(up.step);
        if (kd >= 0 || ku != -kd) throw DomainError("pairing must join a down jump -k with an up jump +k");
        if (!global_before(down, up)) throw DomainError("paired down jump must precede its up jump");
    }
}

template <class S>
PathWeight<S> path_weight(const RibbonPath& path, const BasicSpecialization<S>& v_out, const BasicSpecialization<S>& v_in) {
    validate_ribbon_path(path);
    using T = scalar_traits<S>;
    std::vector<std::vector<char>> paired(path.sites.size());
    for (std::size_t s = 0; s < path.sites.size(); ++s) paired[s].assign(static_cast<std::size_t>(path.sites[s].length()), 0);
    PathWeight<S> w{T::from_int(1), 0, 0};
    for (const auto& [down, up] : path.pairings) {
        paired[down.site][down.step] = paired[up.site][up.step] = 1;
        w.value *= T::from_int(path.sites[up.site].step_degree(up.step));
        ++w.q;
    }
    for (std::size_t s = 0; s < path.sites.size(); ++s) {
        const SlidingPath& site = path.sites[s];
        for (int i = 0; i < site.length(); ++i) {
            int e = site.step_degree(i);
            if (e == 0) {
                w.value *= T::from_int(site.heights[i]);
                ++w.m;
            } else if (!paired[s][i]) {
                w.value *= e > 0 ? v_in.at(e) : T::conjugate(v_out.at(-e));
            }
        }
    }
    return w;
}

std::pair<Partition, Partition> unpaired_jump_profiles(const RibbonPath& path) {
    validate_ribbon_path(path);
    std::vector<std::vector<char>> paired(path.sites.size());
    for (std::size_t s = 0; s < path.sites.size(); ++s) paired[s].assign(static_cast<std::size_t>(path.sites[s].length()), 0);
    for (const auto& [down, up] : path.pairings) paired[down.site][down.step] = paired[up.site][up.step] = 1;
    std::vector<int> downs, ups;
    for (std::size_t s = 0; s < path.sites.size(); ++s) {
        for (int i = 0; i < path.sites[s].length(); ++i) {
            int e = path.sites[s].step_degree(i);
            if (e == 0 || paired[s][i]) continue;
            (e > 0 ? ups : downs).push_back(std::abs(e));
        }
    }
    return {partition_from_multiset(downs), partition_from_multiset(ups)};
}

bool is_connected(const RibbonPath& path) {
    Decoration nu(path.sites.size(), 1);
    return is_connected_decorated(path, nu);
}

bool is_connected_decorated(const RibbonPath& path, const Decoration& nu) {
    int n = static_cast<int>(path.sites.size());
    std::vector<int> groups = groups_from_decoration(nu, n);
    UnionFind uf(static_cast<int>(nu.size()));
    for (const auto& [down, up] : path.pairings) uf.unite(groups[down.site], groups[up.site]);
    return uf.components() <= 1;
}

int height_bound(const std::vector<int>& lengths, int K) {
    int total = std::accumulate(lengths.begin(), lengths.end(), 0);
    return K * ((total + 1) / 2);
}

// ---------------------------------------------------------------------------
// Transfer-style dynamic programme over (site, step, height, open down jumps)
// ---------------------------------------------------------------------------

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Open down jumps as sorted (component label, size) pairs; label 0 is the component of the current site.
using Pending = std::vector<std::pair<int, int>>;

template <class S>
struct DPConfig {
    std::vector<int> lengths;
    std::vector<int> groups;  // decoration group per site
    bool connected = false;
    bool allow_pairings = true;
    int hmax = 0;
    const BasicSpecialization<S>* v_out = nullptr;
    const BasicSpecialization<S>* v_in = nullptr;
    // When budgeted, unpaired jumps must use up exactly the given multiplicities (weight 1 each).
    bool budgeted = false;
    std::vector<int> budget;  // [out counts for k = 0..kb, in counts for k = 0..kb]
    int kb = 0;
};

template <class S>
class PathDP {
public:
    explicit PathDP(const DPConfig<S>& cfg) : cfg_(cfg) {
        int n = static_cast<int>(cfg_.lengths.size());
        suffix_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int s = n - 1; s >= 0; --s) suffix_[s] = suffix_[s + 1] + cfg_.lengths[s];
        offset_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int s = 0; s < n; ++s) offset_[s + 1] = offset_[s] + cfg_.lengths[s] + 1;
        memo_.resize(static_cast<std::size_t>(offset_[n]));
    }

    struct Transition {
        int dq;
        int dm;
        S coeff;
        int h2;
        Pending pend;
        std::vector<int> budget;
    };

    // Moves available from height h before step `step` of `site`.
    std::vector<Transition> transitions(int site, int step, int h, const Pending& pend, const std::vector<int>& bud) const {
        using T = scalar_traits<S>;
        std::vector<Transition> out;
        int len = cfg_.lengths[site];
        int after = len - step - 1;
        int remaining_total = after + suffix_[site + 1];
        for (int h2 = 0; h2 <= cfg_.hmax; ++h2) {
            if (after == 0 && h2 != 0) break;
            int e = h2 - h;
            if (e == 0) {
                if (h == 0) continue;
                out.push_back({0, 1, T::from_int(h), h2, pend, bud});
            } else if (e > 0) {
                int k = e;
                S w;
                std::vector<int> b2 = bud;
                if (unpaired_allowed(k, false, b2, w)) out.push_back({0, 0, w, h2, pend, std::move(b2)});
                if (cfg_.allow_pairings) {
                    // Close one open down jump of size k, grouped by component label.
                    std::map<int, int> mult;
                    for (const auto& [lab, kk] : pend) {
                        if (kk == k) ++mult[lab];
                    }
                    for (const auto& [lab, count] : mult) {
                        Pending p2 = pend;
                        auto it = std::find(p2.begin(), p2.end(), std::make_pair(lab, k));
                        p2.erase(it);
                        if (cfg_.connected) {
                            for (auto& entry : p2) {
                                if (entry.first == lab) entry.first = 0;
                            }
                        }
                        out.push_back({1, 0, T::from_int(static_cast<long long>(count) * k), h2, canonical(std::move(p2)), bud});
                    }
                }
            } else {
                int k = -e;
                S w;
                std::vector<int> b2 = bud;
                if (unpaired_allowed(k, true, b2, w)) out.push_back({0, 0, w, h2, pend, std::move(b2)});
                if (cfg_.allow_pairings && static_cast<int>(pend.size()) + 1 <= remaining_total) {
                    Pending p2 = pend;
                    p2.emplace_back(0, k);
                    out.push_back({0, 0, T::from_int(1), h2, canonical(std::move(p2)), bud});
                }
            }
        }
        return out;
    }

    BiPolynomial<S> solve(int site, int step, int h, const Pending& pend, const std::vector<int>& bud) {
        using T = scalar_traits<S>;
        int n = static_cast<int>(cfg_.lengths.size());
        if (step == cfg_.lengths[site]) {
            if (site == n - 1) {
                bool spent = std::all_of(bud.begin(), bud.end(), [](int x) { return x == 0; });
                return pend.empty() && spent ? BiPolynomial<S>::constant(T::from_int(1)) : BiPolynomial<S>();
            }
            Pending next = pend;
            if (cfg_.connected && cfg_.groups[site + 1] != cfg_.groups[site]) {
                int fresh = 0;
                bool current_open = false;
                for (const auto& entry : next) {
                    fresh = std::max(fresh, entry.first);
                    current_open |= entry.first == 0;
                }
                if (!current_open) return {};  // the finished component can never be joined again
                for (auto& entry : next) {
                    if (entry.first == 0) entry.first = fresh + 1;
                }
                next = canonical(std::move(next));
            }
            return solve(site + 1, 0, 0, next, bud);
        }
        if (static_cast<int>(pend.size()) > cfg_.lengths[site] - step + suffix_[site + 1]) return {};
        std::vector<int> key;
        key.reserve(2 + bud.size() + 2 * pend.size());
        key.push_back(h);
        key.insert(key.end(), bud.begin(), bud.end());
        key.push_back(-1);
        for (const auto& [lab, k] : pend) {
            key.push_back(lab);
            key.push_back(k);
        }
        auto& table = memo_[static_cast<std::size_t>(offset_[site] + step)];
        auto found = table.find(key);
        if (found != table.end()) return found->second;
        BiPolynomial<S> total;
        for (const auto& t : transitions(site, step, h, pend, bud)) {
            BiPolynomial<S> sub = solve(site, step + 1, t.h2, t.pend, t.budget);
            if (!sub.is_zero()) total += sub.shifted(t.dq, t.dm, t.coeff);
        }
        table.emplace(std::move(key), total);
        return total;
    }

    Pending canonical(Pending p) const {
        if (!cfg_.connected) {
            for (auto& entry : p) entry.first = 0;
            std::sort(p.begin(), p.end());
            return p;
        }
        std::map<int, std::vector<int>> by_label;
        for (const auto& [lab, k] : p) by_label[lab].push_back(k);
        std::vector<int> current;
        std::vector<std::vector<int>> others;
        for (auto& [lab, ks] : by_label) {
            std::sort(ks.begin(), ks.end());
            if (lab == 0) {
                current = ks;
            } else {
                others.push_back(ks);
            }
        }
        std::sort(others.begin(), others.end());
        Pending out;
        for (int k : current) out.emplace_back(0, k);
        for (std::size_t i = 0; i < others.size(); ++i) {
            for (int k : others[i]) out.emplace_back(static_cast<int>(i) + 1, k);
        }
        return out;
    }

    std::vector<int> initial_budget() const { return cfg_.budget; }

private:
    bool unpaired_allowed(int k, bool down, std::vector<int>& bud, S& weight) const {
        using T = scalar_traits<S>;
        if (cfg_.budgeted) {
            if (k > cfg_.kb) return false;
            int index = (down ? 0 : cfg_.kb + 1) + k;
            if (bud[index] == 0) return false;
            --bud[index];
            weight = T::from_int(1);
            return true;
        }
        const BasicSpecialization<S>& v = down ? *cfg_.v_out : *cfg_.v_in;
        if (!v.contains(k)) return false;
        weight = down ? T::conjugate(v.at(k)) : v.at(k);
        return true;
    }

    DPConfig<S> cfg_;
    std::vector<int> suffix_;
    std::vector<int> offset_;
    std::vector<std::unordered_map<std::vector<int>, BiPolynomial<S>, VecHash>> memo_;
};

template <class S>
BiPolynomial<S> run_dp(const DPConfig<S>& cfg, int threads) {
    if (cfg.lengths.empty()) throw DomainError("at least one site is required");
    for (int l : cfg.lengths) {
        if (l < 1) throw DomainError("site lengths must be positive");
    }
    PathDP<S> root(cfg);
    std::vector<int> bud = root.initial_budget();
    auto first = root.transitions(0, 0, 0, Pending{}, bud);
    std::vector<BiPolynomial<S>> parts(first.size());
    auto work = [&](PathDP<S>& engine, std::size_t i) {
        const auto& t = first[i];
        parts[i] = engine.solve(0, 1, t.h2, t.pend, t.budget).shifted(t.dq, t.dm, t.coeff);
    };
    if (threads <= 1 || first.size() <= 1) {
        for (std::size_t i = 0; i < first.size(); ++i) work(root, i);
    } else {
        int used = std::min<int>(threads, static_cast<int>(first.size()));
        std::vector<std::thread> pool;
        for (int w = 0; w < used; ++w) {
            pool.emplace_back([&, w] {
                PathDP<S> engine(cfg);
                for (std::size_t i = static_cast<std::size_t>(w); i < first.size(); i += static_cast<std::size_t>(used)) work(engine, i);
            });
        }
        for (auto& t : pool) t.join();
    }
    BiPolynomial<S> total;
    for (const auto& p : parts) total += p;
    return total;
}

template <class S>
int support_of(const BasicSpecialization<S>& a, const BasicSpecialization<S>& b) {
    return std::max(a.support_bound(), b.support_bound());
}

}  // namespace

template <class S>
BiPolynomial<S> Y_sum(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                      const BasicSpecialization<S>& v_in, const RibbonOptions& opts) {
    DPConfig<S> cfg;
    cfg.lengths = lengths;
    cfg.groups.assign(lengths.size(), 0);
    cfg.connected = false;
    cfg.hmax = height_bound(lengths, support_of(v_out, v_in));
    cfg.v_out = &v_out;
    cfg.v_in = &v_in;
    return run_dp(cfg, opts.threads);
}

template <class S>
BiPolynomial<S> W_sum_decorated(const std::vector<int>& lengths, const Decoration& nu,
                                const BasicSpecialization<S>& v_out, const BasicSpecialization<S>& v_in,
                                const RibbonOptions& opts) {
    DPConfig<S> cfg;
    cfg.lengths = lengths;
    cfg.groups = groups_from_decoration(nu, static_cast<int>(lengths.size()));
    cfg.connected = true;
    cfg.hmax = height_bound(lengths, support_of(v_out, v_in));
    cfg.v_out = &v_out;
    cfg.v_in = &v_in;
    return run_dp(cfg, opts.threads);
}

template <class S>
BiPolynomial<S> W_sum(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                      const BasicSpecialization<S>& v_in, const RibbonOptions& opts) {
    if (lengths.empty()) throw DomainError("at least one site is required");
    return W_sum_decorated(lengths, Decoration(lengths.size(), 1), v_out, v_in, opts);
}

template <class S>
BiPolynomial<S> single_site_unpaired(int ell, const BasicSpecialization<S>& v_out, const BasicSpecialization<S>& v_in) {
    DPConfig<S> cfg;
    cfg.lengths = {ell};
    cfg.groups = {0};
    cfg.allow_pairings = false;
    cfg.hmax = height_bound(cfg.lengths, support_of(v_out, v_in));
    cfg.v_out = &v_out;
    cfg.v_in = &v_in;
    return run_dp(cfg, 1);
}

namespace {

// Expands Π_j O_{p_j} into (coefficient, T-index lists per factor) terms; lists containing T_1 are dropped
// because a length-one site only slides at height zero.
std::vector<std::pair<long long, std::vector<std::vector<int>>>> expand_kmk_product(const std::vector<int>& p) {
    std::vector<std::pair<long long, std::vector<std::vector<int>>>> terms{{1, {}}};
    for (int pj : p) {
        KmkPolynomial poly = kmk_polynomial(pj);
        std::vector<std::pair<long long, std::vector<std::vector<int>>>> next;
        for (const auto& [coef, factors] : terms) {
            for (const auto& [key, c] : poly) {
                if (std::find(key.begin(), key.end(), 1) != key.end()) continue;
                auto f = factors;
                f.push_back(key);
                next.emplace_back(coef * c, std::move(f));
            }
        }
        terms = std::move(next);
    }
    return terms;
}

}  // namespace

template <class S>
BiPolynomial<S> decorated_cumulants_poly(const std::vector<int>& p, const BasicSpecialization<S>& v_out,
                                         const BasicSpecialization<S>& v_in, const RibbonOptions& opts) {
    if (p.empty()) throw DomainError("at least one statistic is required");
    using T = scalar_traits<S>;
    std::map<std::pair<std::vector<int>, Decoration>, BiPolynomial<S>> cache;
    BiPolynomial<S> total;
    for (const auto& [coef, factors] : expand_kmk_product(p)) {
        std::vector<int> lengths;
        Decoration nu;
        for (const auto& f : factors) {
            lengths.insert(lengths.end(), f.begin(), f.end());
            nu.push_back(static_cast<int>(f.size()));
        }
        auto key = std::make_pair(lengths, nu);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, W_sum_decorated(lengths, nu, v_out, v_in, opts)).first;
        total += it->second.scaled(T::from_int(coef));
    }
    return total;
}

std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int max_label) {
        if (i == n) {
            out.push_back(a);
            return;
        }
        for (int lab = 0; lab <= max_label + 1; ++lab) {
            a[i] = lab;
            rec(i + 1, std::max(max_label, lab));
        }
    };
    a[0] = 0;
    rec(1, 0);
    return out;
}

namespace {

std::vector<std::vector<int>> blocks_of(const std::vector<int>& labels) {
    int nb = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nb));
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) blocks[labels[i]].push_back(i);
    return blocks;
}

}  // namespace

template <class S>
BiPolynomial<S> decorated_cumulants_poly_from_plain(const std::vector<int>& p, const BasicSpecialization<S>& v_out,
                                                    const BasicSpecialization<S>& v_in) {
    if (p.empty()) throw DomainError("at least one statistic is required");
    using T = scalar_traits<S>;
    std::map<std::vector<int>, BiPolynomial<S>> kappa;
    auto plain = [&](std::vector<int> ls) {
        std::sort(ls.begin(), ls.end());
        auto it = kappa.find(ls);
        if (it == kappa.end()) it = kappa.emplace(ls, W_sum(ls, v_out, v_in)).first;
        return it->second;
    };
    BiPolynomial<S> total;
    for (const auto& [coef, factors] : expand_kmk_product(p)) {
        std::vector<int> lengths, group;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            for (int l : factors[j]) {
                lengths.push_back(l);
                group.push_back(static_cast<int>(j));
            }
        }
        BiPolynomial<S> term;
        for (const auto& labels : set_partitions(static_cast<int>(lengths.size()))) {
            auto blocks = blocks_of(labels);
            UnionFind uf(static_cast<int>(factors.size()));
            for (const auto& b : blocks) {
                for (int i : b) uf.unite(group[b.front()], group[i]);
            }
            if (uf.components() != 1) continue;
            BiPolynomial<S> prod = BiPolynomial<S>::constant(T::from_int(1));
            for (const auto& b : blocks) {
                std::vector<int> ls;
                for (int i : b) ls.push_back(lengths[i]);
                prod = prod * plain(ls);
                if (prod.is_zero()) break;
            }
            term += prod;
        }
        total += term.scaled(T::from_int(coef));
    }
    return total;
}

template <class S>
BiPolynomial<S> cumulant_from_moments(int n, const std::function<BiPolynomial<S>(const std::vector<int>&)>& moment_of_subset) {
    using T = scalar_traits<S>;
    BiPolynomial<S> total;
    for (const auto& labels : set_partitions(n)) {
        auto blocks = blocks_of(labels);
        long long nb = static_cast<long long>(blocks.size());
        long long factor = (nb % 2 == 1) ? 1 : -1;
        for (long long i = 2; i < nb; ++i) factor *= i;
        BiPolynomial<S> prod = BiPolynomial<S>::constant(T::from_int(factor));
        for (const auto& b : blocks) prod = prod * moment_of_subset(b);
        total += prod;
    }
    return total;
}

template <class S>
BiPolynomial<S> moment_from_cumulants(int n, const std::function<BiPolynomial<S>(const std::vector<int>&)>& cumulant_of_subset) {
    using T = scalar_traits<S>;
    BiPolynomial<S> total;
    for (const auto& labels : set_partitions(n)) {
        BiPolynomial<S> prod = BiPolynomial<S>::constant(T::from_int(1));
        for (const auto& b : blocks_of(labels)) prod = prod * cumulant_of_subset(b);
        total += prod;
    }
    return total;
}

BiPolynomial<Rational> C_count(const std::vector<int>& lengths, const Partition& mu_out, const Partition& mu_in) {
    if (lengths.empty()) throw DomainError("at least one site is required");
    if (mu_out.size() != mu_in.size()) throw DomainError("unpaired jump profiles must have equal sizes");
    DPConfig<GaussRational> cfg;
    cfg.lengths = lengths;
    cfg.groups.resize(lengths.size());
    std::iota(cfg.groups.begin(), cfg.groups.end(), 0);
    cfg.connected = true;
    cfg.budgeted = true;
    cfg.kb = std::max(mu_out.part(1), mu_in.part(1));
    cfg.budget.assign(2 * (static_cast<std::size_t>(cfg.kb) + 1), 0);
    for (int k : mu_out.parts()) ++cfg.budget[k];
    for (int k : mu_in.parts()) ++cfg.budget[cfg.kb + 1 + k];
    cfg.hmax = height_bound(lengths, std::max(1, cfg.kb));
    BiPolynomial<GaussRational> counts = run_dp(cfg, 1);
    BiPolynomial<Rational> out;
    for (const auto& [key, c] : counts.terms()) out.add(key.first, key.second, c.re);
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force enumeration oracle
// ---------------------------------------------------------------------------

namespace {

struct GlobalStep {
    int site;
    int step;
    int degree;
};

template <class S>
void enumerate_pairings(const std::vector<GlobalStep>& steps, std::size_t i, std::vector<char>& used,
                        std::vector<std::pair<StepRef, StepRef>>& pairs, const BasicSpecialization<S>& v_out,
                        const BasicSpecialization<S>& v_in, const std::function<void(const std::vector<std::pair<StepRef, StepRef>>&)>& leaf) {
    if (i == steps.size()) {
        leaf(pairs);
        return;
    }
    const GlobalStep& st = steps[i];
    if (st.degree == 0 || used[i]) {
        enumerate_pairings(steps, i + 1, used, pairs, v_out, v_in, leaf);
        return;
    }
    int k = std::abs(st.degree);
    if (st.degree > 0) {
        if (v_in.contains(k)) enumerate_pairings(steps, i + 1, used, pairs, v_out, v_in, leaf);
        return;
    }
    if (v_out.contains(k)) enumerate_pairings(steps, i + 1, used, pairs, v_out, v_in, leaf);
    for (std::size_t j = i + 1; j < steps.size(); ++j) {
        if (used[j] || steps[j].degree != k) continue;
        used[j] = 1;
        pairs.push_back({StepRef{st.site, st.step}, StepRef{steps[j].site, steps[j].step}});
        enumerate_pairings(steps, i + 1, used, pairs, v_out, v_in, leaf);
        pairs.pop_back();
        used[j] = 0;
    }
}

}  // namespace

template <class S>
void for_each_ribbon_path(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                          const BasicSpecialization<S>& v_in, const std::function<void(const RibbonPath&)>& visit) {
    if (lengths.empty()) throw DomainError("at least one site is required");
    int hmax = height_bound(lengths, support_of(v_out, v_in));
    std::vector<std::vector<SlidingPath>> per_site;
    for (int l : lengths) {
        std::vector<SlidingPath> keep;
        if (hmax > 0) {
            for (auto& path : enumerate_sliding_paths(l, hmax)) {
                bool ok = true;
                for (int i = 0; i < path.length() && ok; ++i) {
                    ok = path.heights[i + 1] <= hmax && !(path.step_degree(i) == 0 && path.heights[i] == 0);
                }
                if (ok) keep.push_back(std::move(path));
            }
        }
        per_site.push_back(std::move(keep));
    }
    std::vector<std::size_t> idx(lengths.size(), 0);
    for (const auto& list : per_site) {
        if (list.empty()) return;
    }
    while (true) {
        RibbonPath path;
        std::vector<GlobalStep> steps;
        for (std::size_t s = 0; s < lengths.size(); ++s) {
            path.sites.push_back(per_site[s][idx[s]]);
            for (int i = 0; i < lengths[s]; ++i) steps.push_back({static_cast<int>(s), i, path.sites.back().step_degree(i)});
        }
        std::vector<char> used(steps.size(), 0);
        std::vector<std::pair<StepRef, StepRef>> pairs;
        enumerate_pairings<S>(steps, 0, used, pairs, v_out, v_in, [&](const std::vector<std::pair<StepRef, StepRef>>& pr) {
            path.pairings = pr;
            visit(path);
        });
        std::size_t s = 0;
        while (s < idx.size()) {
            if (++idx[s] < per_site[s].size()) break;
            idx[s] = 0;
            ++s;
        }
        if (s == idx.size()) break;
    }
}

template <class S>
BiPolynomial<S> enumerate_paths_sum(const std::vector<int>& lengths, const BasicSpecialization<S>& v_out,
                                    const BasicSpecialization<S>& v_in, const Decoration* connected_along) {
    BiPolynomial<S> total;
    for_each_ribbon_path<S>(lengths, v_out, v_in, [&](const RibbonPath& path) {
        if (connected_along && !is_connected_decorated(path, *connected_along)) return;
        PathWeight<S> w = path_weight(path, v_out, v_in);
        total.add(w.q, w.m, w.value);
    });
    return total;
}

#define JM_RIBBON_INSTANTIATE(S)                                                                                         \
    template PathWeight<S> path_weight<S>(const RibbonPath&, const BasicSpecialization<S>&, const BasicSpecialization<S>&); \
    template BiPolynomial<S> Y_sum<S>(const std::vector<int>&, const BasicSpecialization<S>&, const BasicSpecialization<S>&, \
                                      const RibbonOptions&);                                                             \
    template BiPolynomial<S> W_sum<S>(const std::vector<int>&, const BasicSpecialization<S>&, const BasicSpecialization<S>&, \
                                      const RibbonOptions&);                                                             \
    template BiPolynomial<S> W_sum_decorated<S>(const std::vector<int>&, const Decoration&, const BasicSpecialization<S>&, \
                                                const BasicSpecialization<S>&, const RibbonOptions&);                    \
    template BiPolynomial<S> single_site_unpaired<S>(int, const BasicSpecialization<S>&, const BasicSpecialization<S>&); \
    template BiPolynomial<S> decorated_cumulants_poly<S>(const std::vector<int>&, const BasicSpecialization<S>&,        \
                                                         const BasicSpecialization<S>&, const RibbonOptions&);           \
    template BiPolynomial<S> decorated_cumulants_poly_from_plain<S>(const std::vector<int>&, const BasicSpecialization<S>&, \
                                                                    const BasicSpecialization<S>&);                      \
    template BiPolynomial<S> enumerate_paths_sum<S>(const std::vector<int>&, const BasicSpecialization<S>&,             \
                                                    const BasicSpecialization<S>&, const Decoration*);                   \
    template void for_each_ribbon_path<S>(const std::vector<int>&, const BasicSpecialization<S>&,                       \
                                          const BasicSpecialization<S>&, const std::function<void(const RibbonPath&)>&); \
    template BiPolynomial<S> cumulant_from_moments<S>(int, const std::function<BiPolynomial<S>(const std::vector<int>&)>&); \
    template BiPolynomial<S> moment_from_cumulants<S>(int, const std::function<BiPolynomial<S>(const std::vector<int>&)>&);

JM_RIBBON_INSTANTIATE(Complex)
JM_RIBBON_INSTANTIATE(GaussRational)

}  // namespace jm
