#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rift/graphs.hpp"
#include "rift/report.hpp"

namespace rift {

using BigInt = boost::multiprecision::cpp_int;

/// Circular clock of circumference N. Only occupied positions are stored, so
/// N may be astronomically larger than the instance.
class ClockInstance {
public:
    /// Requires N >= 2, at least one occupied position, every position in
    /// [0, N) and every value in [1, floor(N/2)].
    ClockInstance(BigInt circumference, std::map<BigInt, BigInt> occupied);

    /// Every position 0..n-1 occupied, values in clock order.
    static ClockInstance dense(const std::vector<BigInt>& values);

    const BigInt& circumference() const noexcept { return circumference_; }
    const std::map<BigInt, BigInt>& occupied() const noexcept { return occupied_; }
    std::size_t size() const noexcept { return occupied_.size(); }
    bool is_dense() const { return BigInt(occupied_.size()) == circumference_; }

    /// Position reached from p by moving `value` steps.
    BigInt clockwise(const BigInt& p, const BigInt& value) const;
    BigInt counterclockwise(const BigInt& p, const BigInt& value) const;

    friend bool operator==(const ClockInstance&, const ClockInstance&) = default;

private:
    BigInt circumference_;
    std::map<BigInt, BigInt> occupied_;
};

enum class Turn { cw, ccw };

const char* to_string(Turn turn) noexcept;

struct ClockMove {
    BigInt position;
    Turn turn = Turn::cw;

    friend bool operator==(const ClockMove&, const ClockMove&) = default;
};

/// Selection sequence. The turn of the last move is never used.
struct ClockSolution {
    std::vector<ClockMove> moves;

    friend bool operator==(const ClockSolution&, const ClockSolution&) = default;
};

/// Vertex i is the i-th occupied position in increasing order. An arc joins
/// u to w when w is occupied and one step of value(u) from u lands on it.
Digraph clock_to_digraph(const ClockInstance& clock);

struct ClockResult {
    SolveStatus status = SolveStatus::unsolvable;
    std::optional<ClockSolution> solution;
    std::uint64_t nodes = 0;
};

inline constexpr std::size_t kMaxClockSubsetDp = 22;

/// Exact. Subset dynamic programming up to kMaxClockSubsetDp occupied
/// positions, budgeted backtracking above. Coinciding turns are reported cw.
ClockResult solve_clock(const ClockInstance& clock,
                        std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max());

ValidityReport verify_clock_solution(const ClockInstance& clock, const ClockSolution& solution);

/// Dense instance with values uniform in [1, floor(n/2)].
ClockInstance gen_random_clock(std::size_t n, std::uint64_t seed);

/// Dense instance with a planted selection order: each value is the shorter
/// distance to the successor, the last value is random.
ClockInstance gen_solvable_clock(std::size_t n, std::uint64_t seed);
ClockInstance gen_solvable_clock(const std::vector<std::size_t>& order, std::uint64_t seed);

/// Repunit sum of 10^i for i in [0, k).
BigInt repunit(int k);

/// Sum of 10^i for i in [min(j,k), max(j,k)); zero when j == k.
BigInt d_jk(int j, int k);

/// Node (segment, offset) of the construction, at absolute position
/// repunit(segment) + offset.
struct NodeLabel {
    int segment = 0;
    BigInt offset;

    friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
    friend bool operator<(const NodeLabel& a, const NodeLabel& b)
    {
        return std::tie(a.segment, a.offset) < std::tie(b.segment, b.offset);
    }
};

enum class SecondaryCase { a, b, c };

/// Extra node placed for a vertex j of outdegree 2 with successors k < m.
struct SecondaryNode {
    int j = 0;
    int k = 0;
    int m = 0;
    SecondaryCase which = SecondaryCase::a;
    NodeLabel label;

    friend bool operator==(const SecondaryNode&, const SecondaryNode&) = default;
};

struct Transition {
    BigInt from;
    BigInt to;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend bool operator<(const Transition& a, const Transition& b)
    {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    }
};

struct ReductionCertificate {
    Digraph source;
    ClockInstance clock;
    std::map<NodeLabel, BigInt> labels;
    std::vector<SecondaryNode> secondaries;
    std::vector<Transition> intended;
    std::optional<bool> source_verdict;
    std::optional<bool> clock_verdict;

    friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

/// Partial Hands of Time instance whose complete selections correspond to
/// directed Hamiltonian paths of d. Requires outdegree 1 or 2 everywhere and
/// v >= 2. Verdicts are left empty.
ReductionCertificate reduce_digraph_to_phot(const Digraph& d);

/// Every arc of clock_to_digraph is an intended transition and vice versa.
ValidityReport audit_no_stray_landing(const ReductionCertificate& cert);

/// Direct checks of the digit facts the construction relies on: pairwise
/// distinct d_jk, case (c) offsets leading with 8 or 9, and empty stray
/// targets for secondaries of cases (a) and (b).
ValidityReport check_digit_lemmas(const ReductionCertificate& cert);

}  // namespace rift
