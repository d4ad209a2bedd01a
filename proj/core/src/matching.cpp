#include "rift/matching.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>

#include "rift/error.hpp"

namespace rift {

std::optional<std::vector<int>> perfect_matching_subset_dp(const CostMatrix& cost)
{
    const int n = static_cast<int>(cost.size());
    if (n % 2 != 0)
        return std::nullopt;
    if (n > kMaxSubsetMatching)
        throw Error(Errc::instance_too_large, "subset matching supports at most " +
                                                  std::to_string(kMaxSubsetMatching) + " vertices");
    if (n == 0)
        return std::vector<int>{};

    const double inf = std::numeric_limits<double>::infinity();
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<double> best(subsets, inf);
    std::vector<signed char> partner(subsets, -1);
    best[0] = 0.0;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        if (std::popcount(mask) % 2 != 0)
            continue;
        const int i = std::countr_zero(mask);
        for (std::size_t rest = mask & (mask - 1); rest; rest &= rest - 1) {
            const int j = std::countr_zero(rest);
            const auto& c = cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!c)
                continue;
            const std::size_t sub = mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
            if (best[sub] + *c < best[mask]) {
                best[mask] = best[sub] + *c;
                partner[mask] = static_cast<signed char>(j);
            }
        }
    }
    if (!std::isfinite(best[subsets - 1]))
        return std::nullopt;
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    for (std::size_t mask = subsets - 1; mask;) {
        const int i = std::countr_zero(mask);
        const int j = partner[mask];
        mate[static_cast<std::size_t>(i)] = j;
        mate[static_cast<std::size_t>(j)] = i;
        mask &= ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
    }
    return mate;
}

namespace {

/// Edmonds' maximum-weight matching with blossom shrinking and dual
/// variables, after the classic O(n^3) formulation by Galil. Endpoint p of
/// edge k is vertex edges[k].u for p = 2k and edges[k].v for p = 2k+1.
class BlossomMatcher {
public:
    BlossomMatcher(int n, const std::vector<WeightedEdge>& edges, bool max_cardinality)
        : n_(n), edges_(edges), max_cardinality_(max_cardinality)
    {
    }

    std::vector<int> run();

private:
    using i64 = std::int64_t;

    static int at(const std::vector<int>& v, int j)
    {
        const int len = static_cast<int>(v.size());
        return v[static_cast<std::size_t>(((j % len) + len) % len)];
    }

    i64 slack(int k) const
    {
        const auto& e = edges_[static_cast<std::size_t>(k)];
        return dual_[e.u] + dual_[e.v] - 2 * e.weight;
    }

    void leaves(int b, std::vector<int>& out) const
    {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : childs_[b])
            leaves(t, out);
    }

    std::vector<int> leaves(int b) const
    {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p);
    int scan_blossom(int v, int w);
    void add_blossom(int base, int k);
    void expand_blossom(int b, bool endstage);
    void augment_blossom(int b, int v);
    void augment_matching(int k);

    int n_;
    std::vector<WeightedEdge> edges_;
    bool max_cardinality_;

    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> childs_;
    std::vector<int> base_;
    std::vector<std::vector<int>> endps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossom_best_;
    std::vector<bool> has_blossom_best_;
    std::vector<int> unused_;
    std::vector<i64> dual_;
    std::vector<bool> allowedge_;
    std::vector<int> queue_;
};

void BlossomMatcher::assign_label(int w, int t, int p)
{
    const int b = inblossom_[w];
    assert(label_[w] == 0 && label_[b] == 0);
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
        leaves(b, queue_);
    } else if (t == 2) {
        const int base = base_[b];
        assert(mate_[base] >= 0);
        assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
}

int BlossomMatcher::scan_blossom(int v, int w)
{
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
        int b = inblossom_[v];
        if (label_[b] & 4) {
            base = base_[b];
            break;
        }
        assert(label_[b] == 1);
        path.push_back(b);
        label_[b] = 5;
        if (labelend_[b] == -1) {
            v = -1;
        } else {
            v = endpoint_[labelend_[b]];
            b = inblossom_[v];
            assert(label_[b] == 2);
            v = endpoint_[labelend_[b]];
        }
        if (w != -1)
            std::swap(v, w);
    }
    for (int b : path)
        label_[b] = 1;
    return base;
}

void BlossomMatcher::add_blossom(int base, int k)
{
    int v = edges_[static_cast<std::size_t>(k)].u;
    int w = edges_[static_cast<std::size_t>(k)].v;
    const int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    const int b = unused_.back();
    unused_.pop_back();
    base_[b] = base;
    parent_[b] = -1;
    parent_[bb] = b;
    auto& path = childs_[b];
    auto& endps = endps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
        parent_[bv] = b;
        path.push_back(bv);
        endps.push_back(labelend_[bv]);
        v = endpoint_[labelend_[bv]];
        bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
        parent_[bw] = b;
        path.push_back(bw);
        endps.push_back(labelend_[bw] ^ 1);
        w = endpoint_[labelend_[bw]];
        bw = inblossom_[w];
    }
    assert(label_[bb] == 1);
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dual_[b] = 0;
    for (int leaf : leaves(b)) {
        if (label_[inblossom_[leaf]] == 2)
            queue_.push_back(leaf);
        inblossom_[leaf] = b;
    }

    std::vector<int> bestedgeto(static_cast<std::size_t>(2 * n_), -1);
    for (int child : path) {
        std::vector<std::vector<int>> nblists;
        if (!has_blossom_best_[child]) {
            for (int leaf : leaves(child)) {
                std::vector<int> list;
                for (int p : neighbend_[leaf])
                    list.push_back(p / 2);
                nblists.push_back(std::move(list));
            }
        } else {
            nblists.push_back(blossom_best_[child]);
        }
        for (const auto& nblist : nblists)
            for (int kk : nblist) {
                int i = edges_[static_cast<std::size_t>(kk)].u;
                int j = edges_[static_cast<std::size_t>(kk)].v;
                if (inblossom_[j] == b)
                    std::swap(i, j);
                const int bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 &&
                    (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj])))
                    bestedgeto[bj] = kk;
            }
        blossom_best_[child].clear();
        has_blossom_best_[child] = false;
        bestedge_[child] = -1;
    }
    blossom_best_[b].clear();
    for (int kk : bestedgeto)
        if (kk != -1)
            blossom_best_[b].push_back(kk);
    has_blossom_best_[b] = true;
    bestedge_[b] = -1;
    for (int kk : blossom_best_[b])
        if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b]))
            bestedge_[b] = kk;
}

void BlossomMatcher::expand_blossom(int b, bool endstage)
{
    for (int s : std::vector<int>(childs_[b])) {
        parent_[s] = -1;
        if (s < n_) {
            inblossom_[s] = s;
        } else if (endstage && dual_[s] == 0) {
            expand_blossom(s, endstage);
        } else {
            for (int leaf : leaves(s))
                inblossom_[leaf] = s;
        }
    }
    if (!endstage && label_[b] == 2) {
        const auto& childs = childs_[b];
        const auto& endps = endps_[b];
        const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
        int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
        int jstep, endptrick;
        if (j & 1) {
            j -= static_cast<int>(childs.size());
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        int p = labelend_[b];
        while (j != 0) {
            label_[endpoint_[p ^ 1]] = 0;
            label_[endpoint_[at(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
            assign_label(endpoint_[p ^ 1], 2, p);
            allowedge_[static_cast<std::size_t>(at(endps, j - endptrick) / 2)] = true;
            j += jstep;
            p = at(endps, j - endptrick) ^ endptrick;
            allowedge_[static_cast<std::size_t>(p / 2)] = true;
            j += jstep;
        }
        int bv = at(childs, j);
        label_[endpoint_[p ^ 1]] = label_[bv] = 2;
        labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
        bestedge_[bv] = -1;
        j += jstep;
        while (at(childs, j) != entrychild) {
            bv = at(childs, j);
            if (label_[bv] == 1) {
                j += jstep;
                continue;
            }
            int found = -1;
            for (int leaf : leaves(bv))
                if (label_[leaf] != 0) {
                    found = leaf;
                    break;
                }
            if (found != -1) {
                assert(label_[found] == 2);
                label_[found] = 0;
                label_[endpoint_[mate_[base_[bv]]]] = 0;
                assign_label(found, 2, labelend_[found]);
            }
            j += jstep;
        }
    }
    label_[b] = labelend_[b] = -1;
    childs_[b].clear();
    endps_[b].clear();
    base_[b] = -1;
    blossom_best_[b].clear();
    has_blossom_best_[b] = false;
    bestedge_[b] = -1;
    unused_.push_back(b);
}

void BlossomMatcher::augment_blossom(int b, int v)
{
    int t = v;
    while (parent_[t] != b)
        t = parent_[t];
    if (t >= n_)
        augment_blossom(t, v);
    auto& childs = childs_[b];
    auto& endps = endps_[b];
    const int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
        j -= static_cast<int>(childs.size());
        jstep = 1;
        endptrick = 0;
    } else {
        jstep = -1;
        endptrick = 1;
    }
    while (j != 0) {
        j += jstep;
        t = at(childs, j);
        const int p = at(endps, j - endptrick) ^ endptrick;
        if (t >= n_)
            augment_blossom(t, endpoint_[p]);
        j += jstep;
        t = at(childs, j);
        if (t >= n_)
            augment_blossom(t, endpoint_[p ^ 1]);
        mate_[endpoint_[p]] = p ^ 1;
        mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    base_[b] = base_[childs[0]];
    assert(base_[b] == v);
}

void BlossomMatcher::augment_matching(int k)
{
    const int v = edges_[static_cast<std::size_t>(k)].u;
    const int w = edges_[static_cast<std::size_t>(k)].v;
    const std::pair<int, int> sides[2] = {{v, 2 * k + 1}, {w, 2 * k}};
    for (auto [s, p] : sides) {
        while (true) {
            const int bs = inblossom_[s];
            assert(label_[bs] == 1);
            if (bs >= n_)
                augment_blossom(bs, s);
            mate_[s] = p;
            if (labelend_[bs] == -1)
                break;
            const int t = endpoint_[labelend_[bs]];
            const int bt = inblossom_[t];
            assert(label_[bt] == 2);
            s = endpoint_[labelend_[bt]];
            const int j = endpoint_[labelend_[bt] ^ 1];
            if (bt >= n_)
                augment_blossom(bt, j);
            mate_[j] = labelend_[bt];
            p = labelend_[bt] ^ 1;
        }
    }
}

std::vector<int> BlossomMatcher::run()
{
    const int nedge = static_cast<int>(edges_.size());
    if (nedge == 0 || n_ == 0)
        return std::vector<int>(static_cast<std::size_t>(n_), -1);

    i64 maxweight = 0;
    for (const auto& e : edges_)
        maxweight = std::max(maxweight, e.weight);

    endpoint_.resize(static_cast<std::size_t>(2 * nedge));
    neighbend_.assign(static_cast<std::size_t>(n_), {});
    for (int k = 0; k < nedge; ++k) {
        const auto& e = edges_[static_cast<std::size_t>(k)];
        endpoint_[static_cast<std::size_t>(2 * k)] = e.u;
        endpoint_[static_cast<std::size_t>(2 * k + 1)] = e.v;
        neighbend_[static_cast<std::size_t>(e.u)].push_back(2 * k + 1);
        neighbend_[static_cast<std::size_t>(e.v)].push_back(2 * k);
    }
    const auto n2 = static_cast<std::size_t>(2 * n_);
    mate_.assign(static_cast<std::size_t>(n_), -1);
    label_.assign(n2, 0);
    labelend_.assign(n2, -1);
    inblossom_.resize(static_cast<std::size_t>(n_));
    std::iota(inblossom_.begin(), inblossom_.end(), 0);
    parent_.assign(n2, -1);
    childs_.assign(n2, {});
    base_.assign(n2, -1);
    std::iota(base_.begin(), base_.begin() + n_, 0);
    endps_.assign(n2, {});
    bestedge_.assign(n2, -1);
    blossom_best_.assign(n2, {});
    has_blossom_best_.assign(n2, false);
    unused_.clear();
    for (int b = n_; b < 2 * n_; ++b)
        unused_.push_back(b);
    dual_.assign(n2, 0);
    std::fill(dual_.begin(), dual_.begin() + n_, maxweight);
    allowedge_.assign(static_cast<std::size_t>(nedge), false);

    for (int stage = 0; stage < n_; ++stage) {
        std::fill(label_.begin(), label_.end(), 0);
        std::fill(bestedge_.begin(), bestedge_.end(), -1);
        for (int b = n_; b < 2 * n_; ++b) {
            blossom_best_[b].clear();
            has_blossom_best_[b] = false;
        }
        std::fill(allowedge_.begin(), allowedge_.end(), false);
        queue_.clear();
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1 && label_[inblossom_[v]] == 0)
                assign_label(v, 1, -1);

        bool augmented = false;
        while (true) {
            while (!queue_.empty() && !augmented) {
                const int v = queue_.back();
                queue_.pop_back();
                assert(label_[inblossom_[v]] == 1);
                for (int p : neighbend_[v]) {
                    const int k = p / 2;
                    const int w = endpoint_[p];
                    if (inblossom_[v] == inblossom_[w])
                        continue;
                    i64 kslack = 0;
                    if (!allowedge_[k]) {
                        kslack = slack(k);
                        if (kslack <= 0)
                            allowedge_[k] = true;
                    }
                    if (allowedge_[k]) {
                        if (label_[inblossom_[w]] == 0) {
                            assign_label(w, 2, p ^ 1);
                        } else if (label_[inblossom_[w]] == 1) {
                            const int base = scan_blossom(v, w);
                            if (base >= 0) {
                                add_blossom(base, k);
                            } else {
                                augment_matching(k);
                                augmented = true;
                                break;
                            }
                        } else if (label_[w] == 0) {
                            assert(label_[inblossom_[w]] == 2);
                            label_[w] = 2;
                            labelend_[w] = p ^ 1;
                        }
                    } else if (label_[inblossom_[w]] == 1) {
                        const int b = inblossom_[v];
                        if (bestedge_[b] == -1 || kslack < slack(bestedge_[b]))
                            bestedge_[b] = k;
                    } else if (label_[w] == 0) {
                        if (bestedge_[w] == -1 || kslack < slack(bestedge_[w]))
                            bestedge_[w] = k;
                    }
                }
            }
            if (augmented)
                break;

            int deltatype = -1;
            i64 delta = 0;
            int deltaedge = -1, deltablossom = -1;
            if (!max_cardinality_) {
                deltatype = 1;
                delta = *std::min_element(dual_.begin(), dual_.begin() + n_);
            }
            for (int v = 0; v < n_; ++v)
                if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                    const i64 d = slack(bestedge_[v]);
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 2;
                        deltaedge = bestedge_[v];
                    }
                }
            for (int b = 0; b < 2 * n_; ++b)
                if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                    const i64 kslack = slack(bestedge_[b]);
                    assert(kslack % 2 == 0);
                    const i64 d = kslack / 2;
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 3;
                        deltaedge = bestedge_[b];
                    }
                }
            for (int b = n_; b < 2 * n_; ++b)
                if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 &&
                    (deltatype == -1 || dual_[b] < delta)) {
                    delta = dual_[b];
                    deltatype = 4;
                    deltablossom = b;
                }
            if (deltatype == -1) {
                deltatype = 1;
                delta = std::max<i64>(0, *std::min_element(dual_.begin(), dual_.begin() + n_));
            }

            for (int v = 0; v < n_; ++v) {
                if (label_[inblossom_[v]] == 1)
                    dual_[v] -= delta;
                else if (label_[inblossom_[v]] == 2)
                    dual_[v] += delta;
            }
            for (int b = n_; b < 2 * n_; ++b)
                if (base_[b] >= 0 && parent_[b] == -1) {
                    if (label_[b] == 1)
                        dual_[b] += delta;
                    else if (label_[b] == 2)
                        dual_[b] -= delta;
                }

            if (deltatype == 1) {
                break;
            } else if (deltatype == 2) {
                allowedge_[deltaedge] = true;
                int i = edges_[static_cast<std::size_t>(deltaedge)].u;
                int j = edges_[static_cast<std::size_t>(deltaedge)].v;
                if (label_[inblossom_[i]] == 0)
                    std::swap(i, j);
                assert(label_[inblossom_[i]] == 1);
                queue_.push_back(i);
            } else if (deltatype == 3) {
                allowedge_[deltaedge] = true;
                const int i = edges_[static_cast<std::size_t>(deltaedge)].u;
                assert(label_[inblossom_[i]] == 1);
                queue_.push_back(i);
            } else {
                expand_blossom(deltablossom, false);
            }
        }
        if (!augmented)
            break;
        for (int b = n_; b < 2 * n_; ++b)
            if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 && dual_[b] == 0)
                expand_blossom(b, true);
    }

    std::vector<int> mate(static_cast<std::size_t>(n_), -1);
    for (int v = 0; v < n_; ++v)
        if (mate_[v] >= 0)
            mate[static_cast<std::size_t>(v)] = endpoint_[mate_[v]];
    return mate;
}

}  // namespace

std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality)
{
    for (const auto& e : edges)
        if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count || e.u == e.v)
            throw Error(Errc::precondition, "matching edge endpoints out of range");
    return BlossomMatcher(vertex_count, edges, max_cardinality).run();
}

std::optional<std::vector<int>> perfect_matching_blossom(const CostMatrix& cost)
{
    const int n = static_cast<int>(cost.size());
    if (n % 2 != 0)
        return std::nullopt;
    if (n == 0)
        return std::vector<int>{};

    constexpr double kScale = 1e9;
    std::int64_t top = 0;
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (const auto& c = cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                const auto scaled = static_cast<std::int64_t>(std::llround(*c * kScale));
                edges.push_back({i, j, scaled});
                top = std::max(top, scaled);
            }
    // Maximising (top + 1 - cost) over maximum-cardinality matchings
    // minimises the cost of a perfect matching.
    for (auto& e : edges)
        e.weight = top + 1 - e.weight;
    auto mate = max_weight_matching(n, edges, true);
    if (std::find(mate.begin(), mate.end(), -1) != mate.end())
        return std::nullopt;
    return mate;
}

std::optional<std::vector<int>> min_weight_perfect_matching(const CostMatrix& cost)
{
    if (static_cast<int>(cost.size()) <= kMaxSubsetMatching)
        return perfect_matching_subset_dp(cost);
    return perfect_matching_blossom(cost);
}

}  // namespace rift
