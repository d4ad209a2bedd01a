#include "rift/hands_of_time.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "rift/error.hpp"

namespace rift {

ClockInstance::ClockInstance(BigInt circumference, std::map<BigInt, BigInt> occupied)
    : circumference_(std::move(circumference)), occupied_(std::move(occupied))
{
    if (circumference_ < 2)
        throw Error(Errc::invariant, "circumference must be at least 2");
    if (occupied_.empty())
        throw Error(Errc::invariant, "clock needs an occupied position");
    const BigInt half = circumference_ / 2;
    for (const auto& [position, value] : occupied_) {
        if (position < 0 || position >= circumference_)
            throw Error(Errc::invariant, "position " + position.str() + " outside [0, N)");
        if (value < 1)
            throw Error(Errc::invariant, "value >= 1 violated at position " + position.str());
        if (value > half)
            throw Error(Errc::invariant, "value <= floor(N/2) violated at position " + position.str());
    }
}

ClockInstance ClockInstance::dense(const std::vector<BigInt>& values)
{
    std::map<BigInt, BigInt> occupied;
    for (std::size_t i = 0; i < values.size(); ++i)
        occupied.emplace(BigInt(i), values[i]);
    return ClockInstance(BigInt(values.size()), std::move(occupied));
}

BigInt ClockInstance::clockwise(const BigInt& p, const BigInt& value) const
{
    return (p + value) % circumference_;
}

BigInt ClockInstance::counterclockwise(const BigInt& p, const BigInt& value) const
{
    BigInt q = (p - value) % circumference_;
    return q < 0 ? q + circumference_ : q;
}

const char* to_string(Turn turn) noexcept
{
    return turn == Turn::cw ? "cw" : "ccw";
}

namespace {

std::vector<BigInt> positions_of(const ClockInstance& clock)
{
    std::vector<BigInt> out;
    out.reserve(clock.size());
    for (const auto& entry : clock.occupied())
        out.push_back(entry.first);
    return out;
}

int index_in(const std::vector<BigInt>& sorted, const BigInt& p)
{
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    if (it == sorted.end() || *it != p)
        return -1;
    return static_cast<int>(it - sorted.begin());
}

}  // namespace

Digraph clock_to_digraph(const ClockInstance& clock)
{
    const auto positions = positions_of(clock);
    std::vector<Arc> arcs;
    int u = 0;
    for (const auto& [position, value] : clock.occupied()) {
        const int cw = index_in(positions, clock.clockwise(position, value));
        const int ccw = index_in(positions, clock.counterclockwise(position, value));
        if (cw >= 0)
            arcs.emplace_back(u, cw);
        if (ccw >= 0 && ccw != cw)
            arcs.emplace_back(u, ccw);
        ++u;
    }
    return Digraph(static_cast<int>(clock.size()), std::move(arcs));
}

namespace {

class PathSearch {
public:
    PathSearch(const Digraph& d, std::uint64_t budget)
        : adj_(d.out_neighbors()), used_(adj_.size(), false), budget_(budget)
    {
    }

    std::optional<std::vector<int>> run()
    {
        for (int s = 0; s < static_cast<int>(adj_.size()); ++s)
            if (extend(s))
                return path_;
        return std::nullopt;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

    struct Exhausted {};

private:
    bool extend(int v)
    {
        if (++nodes_ > budget_)
            throw Exhausted{};
        used_[static_cast<std::size_t>(v)] = true;
        path_.push_back(v);
        if (path_.size() == adj_.size())
            return true;
        for (int w : adj_[static_cast<std::size_t>(v)])
            if (!used_[static_cast<std::size_t>(w)] && extend(w))
                return true;
        path_.pop_back();
        used_[static_cast<std::size_t>(v)] = false;
        return false;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<bool> used_;
    std::vector<int> path_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

ClockResult solve_clock(const ClockInstance& clock, std::uint64_t node_budget)
{
    const Digraph graph = clock_to_digraph(clock);
    ClockResult result;
    std::optional<std::vector<int>> path;
    if (clock.size() <= kMaxClockSubsetDp) {
        path = find_directed_ham_path(graph);
        result.nodes = std::uint64_t{1} << clock.size();
    } else {
        PathSearch search(graph, node_budget);
        try {
            path = search.run();
        } catch (const PathSearch::Exhausted&) {
            result.status = SolveStatus::budget_exhausted;
            result.nodes = search.nodes();
            return result;
        }
        result.nodes = search.nodes();
    }
    if (!path)
        return result;

    const auto positions = positions_of(clock);
    ClockSolution solution;
    for (std::size_t i = 0; i < path->size(); ++i) {
        const BigInt& p = positions[static_cast<std::size_t>((*path)[i])];
        Turn turn = Turn::cw;
        if (i + 1 < path->size()) {
            const BigInt& next = positions[static_cast<std::size_t>((*path)[i + 1])];
            if (clock.clockwise(p, clock.occupied().at(p)) != next)
                turn = Turn::ccw;
        }
        solution.moves.push_back({p, turn});
    }
    result.status = SolveStatus::solved;
    result.solution = std::move(solution);
    return result;
}

ValidityReport verify_clock_solution(const ClockInstance& clock, const ClockSolution& solution)
{
    std::set<BigInt> consumed;
    for (std::size_t i = 0; i < solution.moves.size(); ++i) {
        const auto& move = solution.moves[i];
        if (i > 0) {
            const auto& prev = solution.moves[i - 1];
            const BigInt& value = clock.occupied().at(prev.position);
            const BigInt expected = prev.turn == Turn::cw ? clock.clockwise(prev.position, value)
                                                          : clock.counterclockwise(prev.position, value);
            if (expected != move.position)
                return ValidityReport::violation("illegal-move", "move " + std::to_string(i) + " to " +
                                                                     move.position.str() + ", expected " +
                                                                     expected.str());
        }
        if (!clock.occupied().count(move.position) || consumed.count(move.position))
            return ValidityReport::violation("empty-node", "move " + std::to_string(i) + " selects empty position " +
                                                               move.position.str());
        consumed.insert(move.position);
    }
    if (consumed.size() != clock.size())
        return ValidityReport::violation("incomplete", std::to_string(clock.size() - consumed.size()) +
                                                           " occupied positions never selected");
    return ValidityReport::valid();
}

ClockInstance gen_random_clock(std::size_t n, std::uint64_t seed)
{
    if (n < 2)
        throw Error(Errc::precondition, "clock needs n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(1, n / 2);
    std::vector<BigInt> values;
    for (std::size_t i = 0; i < n; ++i)
        values.emplace_back(pick(rng));
    return ClockInstance::dense(values);
}

namespace {

ClockInstance planted_clock(const std::vector<std::size_t>& order, std::mt19937_64& rng)
{
    const std::size_t n = order.size();
    if (n < 2)
        throw Error(Errc::precondition, "clock needs n >= 2");
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
        if (sorted[i] != i)
            throw Error(Errc::precondition, "planted order must be a permutation of 0..n-1");

    std::vector<BigInt> values(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t forward = (order[i + 1] + n - order[i]) % n;
        values[order[i]] = std::min(forward, n - forward);
    }
    values[order.back()] = std::uniform_int_distribution<std::size_t>(1, n / 2)(rng);
    return ClockInstance::dense(values);
}

}  // namespace

ClockInstance gen_solvable_clock(std::size_t n, std::uint64_t seed)
{
    if (n < 2)
        throw Error(Errc::precondition, "clock needs n >= 2");
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return planted_clock(order, rng);
}

ClockInstance gen_solvable_clock(const std::vector<std::size_t>& order, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return planted_clock(order, rng);
}

BigInt repunit(int k)
{
    BigInt r = 0;
    for (int i = 0; i < k; ++i)
        r = r * 10 + 1;
    return r;
}

BigInt d_jk(int j, int k)
{
    if (j < 0 || k < 0)
        throw Error(Errc::precondition, "d_jk indices must be non-negative");
    const int lo = std::min(j, k), hi = std::max(j, k);
    BigInt power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(lo));
    BigInt sum = 0;
    for (int i = lo; i < hi; ++i, power *= 10)
        sum += power;
    return sum;
}

namespace {

BigInt power_of_ten(int k)
{
    return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k));
}

SecondaryCase classify(int j, int k, int m)
{
    if (m < j)
        return SecondaryCase::a;
    if (k < j)
        return SecondaryCase::b;
    return SecondaryCase::c;
}

}  // namespace

ReductionCertificate reduce_digraph_to_phot(const Digraph& d)
{
    const int v = d.vertex_count();
    if (v < 2)
        throw Error(Errc::precondition, "reduction needs at least 2 vertices");
    if (!d.outdeg12())
        throw Error(Errc::precondition, "every vertex needs outdegree 1 or 2");

    const BigInt n = repunit(v);
    auto outs = d.out_neighbors();
    std::map<NodeLabel, BigInt> labels;
    std::map<BigInt, BigInt> occupied;
    std::vector<SecondaryNode> secondaries;
    std::set<Transition> intended;

    auto place = [&](const NodeLabel& label, const BigInt& value) {
        const BigInt position = (repunit(label.segment) + label.offset) % n;
        if (!occupied.emplace(position, value).second)
            throw Error(Errc::internal, "two constructed nodes share position " + position.str());
        labels.emplace(label, position);
        return position;
    };

    for (int j = 0; j < v; ++j) {
        auto& succ = outs[static_cast<std::size_t>(j)];
        std::sort(succ.begin(), succ.end());
        const int k = succ[0];
        const BigInt primary = place({j, 0}, d_jk(j, k));
        intended.insert({primary, repunit(k)});
        if (succ.size() < 2)
            continue;

        const int m = succ[1];
        SecondaryNode node{j, k, m, classify(j, k, m), {}};
        BigInt value;
        switch (node.which) {
        case SecondaryCase::a:
            node.label = {j, d_jk(j, k)};
            value = d_jk(j, m) + d_jk(j, k);
            break;
        case SecondaryCase::b:
            node.label = {j, d_jk(j, k)};
            value = d_jk(j, m) - d_jk(j, k);
            break;
        case SecondaryCase::c:
            node.label = {v - 1, power_of_ten(v - 1) + d_jk(0, j) - d_jk(j, k)};
            value = d_jk(j, m) + d_jk(j, k);
            break;
        }
        const BigInt position = place(node.label, value);
        intended.insert({primary, position});
        intended.insert({position, repunit(m)});
        secondaries.push_back(std::move(node));
    }

    return {d,
            ClockInstance(n, std::move(occupied)),
            std::move(labels),
            std::move(secondaries),
            {intended.begin(), intended.end()},
            std::nullopt,
            std::nullopt};
}

ValidityReport audit_no_stray_landing(const ReductionCertificate& cert)
{
    const auto& clock = cert.clock;
    const auto positions = positions_of(clock);
    const Digraph graph = clock_to_digraph(clock);
    std::set<Transition> actual;
    for (auto [u, w] : graph.arcs())
        actual.insert({positions[static_cast<std::size_t>(u)], positions[static_cast<std::size_t>(w)]});
    const std::set<Transition> expected(cert.intended.begin(), cert.intended.end());
    for (const auto& t : actual)
        if (!expected.count(t))
            return ValidityReport::violation("stray-landing", t.from.str() + " reaches " + t.to.str());
    for (const auto& t : expected)
        if (!actual.count(t))
            return ValidityReport::violation("missing-transition", t.from.str() + " cannot reach " + t.to.str());

    for (int k = 0; k < cert.source.vertex_count(); ++k) {
        auto it = cert.labels.find({k, 0});
        if (it == cert.labels.end() || it->second != repunit(k))
            return ValidityReport::violation("primary-position", "node (" + std::to_string(k) + ", 0)");
    }
    std::set<BigInt> distinct;
    for (const auto& entry : cert.labels)
        if (!distinct.insert(entry.second).second)
            return ValidityReport::violation("label-collision", "position " + entry.second.str());
    return ValidityReport::valid();
}

ValidityReport check_digit_lemmas(const ReductionCertificate& cert)
{
    const int v = cert.source.vertex_count();
    std::map<BigInt, std::pair<int, int>> seen;
    for (int j = 0; j < v; ++j)
        for (int k = j + 1; k < v; ++k) {
            auto [it, fresh] = seen.emplace(d_jk(j, k), std::pair{j, k});
            if (!fresh)
                return ValidityReport::violation("distinct-d", "d_" + std::to_string(j) + std::to_string(k) +
                                                                   " repeats " + it->first.str());
        }

    const auto& clock = cert.clock;
    for (const auto& node : cert.secondaries) {
        const std::string where =
            "vertex " + std::to_string(node.j) + " -> " + std::to_string(node.k) + ", " + std::to_string(node.m);
        const BigInt position = cert.labels.at(node.label);
        const BigInt& value = clock.occupied().at(position);
        switch (node.which) {
        case SecondaryCase::c: {
            const char lead = node.label.offset.str().front();
            if (lead != '8' && lead != '9')
                return ValidityReport::violation("leading-digit", where + ": offset " + node.label.offset.str());
            break;
        }
        case SecondaryCase::a:
        case SecondaryCase::b: {
            // The move away from (m, 0): cw in case (a), ccw in case (b).
            const BigInt stray = node.which == SecondaryCase::a ? clock.clockwise(position, value)
                                                                : clock.counterclockwise(position, value);
            const BigInt stray_offset = node.label.offset + value;
            if (node.which == SecondaryCase::a && stray_offset.str().find('2') == std::string::npos)
                return ValidityReport::violation("digit-two", where + ": offset " + stray_offset.str());
            if (clock.occupied().count(stray))
                return ValidityReport::violation("stray-target", where + ": lands on occupied " + stray.str());
            break;
        }
        }
    }
    return ValidityReport::valid();
}

}  // namespace rift
