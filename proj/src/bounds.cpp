#include "carrylab/bounds.hpp"

namespace carrylab {

BoundSpec mu(const Int& m) {
    BoundSpec spec;
    spec.m = m;
    spec.decomposition = decompose(m);
    if (spec.decomposition.p == 2) {
        spec.regime = MuRegime::EvenP;
        spec.mu = Rat(1, 4);
        return spec;
    }
    spec.regime = MuRegime::OddP;
    const Int& pa = spec.decomposition.p_alpha;
    Rat inner = Rat(1) - Rat(1, pa * pa) - Rat(2, pa);
    if (spec.decomposition.delta == 1) inner += Rat(2, m);
    spec.mu = inner / 4;
    return spec;
}

Rat alon_bound(const Int& p) {
    if (p == 2 || !is_prime(p))
        throw Error(Errc::NotOddPrime, p.str() + " is not an odd prime");
    return Rat(p * p - 1, 4 * p * p);
}

ThresholdSpec thm22_threshold(const Int& p, unsigned alpha, ThresholdSide side) {
    if (p == 2 || !is_prime(p))
        throw Error(Errc::NotOddPrime, p.str() + " is not an odd prime");
    if (alpha < 1) throw Error(Errc::BadArgument, "alpha must be >= 1");
    Int pa = pow_int(p, alpha);
    Int sign = side == ThresholdSide::Minus ? -1 : 1;
    Int t2 = pa + sign;          // 2t
    Int num = 3 * pa * pa + sign * 2 * pa - 1;  // 4 * threshold
    if (t2 % 2 != 0 || num % 4 != 0)
        throw std::logic_error("odd prime powers must give integral thresholds");
    return ThresholdSpec{t2 / 2, num / 4};
}

ThresholdSpec thm23_threshold(unsigned alpha) {
    if (alpha < 1) throw Error(Errc::BadArgument, "alpha must be >= 1");
    Int t = pow_int(2, alpha - 1);
    Int threshold = 3 * pow_int(4, alpha - 1);
    // Same quantity in the subtracted form; both spellings must agree.
    if (threshold != pow_int(2, 2 * alpha) - pow_int(2, 2 * alpha - 2))
        throw std::logic_error("threshold forms disagree");
    return ThresholdSpec{t, threshold};
}

Int interval_carry_count(const Int& m) {
    if (m < 1) throw Error(Errc::BadArgument, "m must be positive");
    return m * m / 4;
}

std::vector<MuTableRow> mu_table(const std::vector<Int>& ms) {
    std::vector<MuTableRow> rows;
    rows.reserve(ms.size());
    for (const auto& m : ms) {
        MuTableRow row;
        row.m = m;
        row.mu = mu(m).mu;
        row.interval_ratio = Rat(interval_carry_count(m), m * m);
        row.gap = Rat(1, 4) - row.mu;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string rat_cell(const Rat& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace

std::string mu_table_csv(const std::vector<MuTableRow>& rows) {
    std::string out =
        "m,mu,mu_approx,interval_ratio,interval_ratio_approx,gap,gap_approx\n";
    for (const auto& row : rows) {
        out += row.m.str() + ',' + rat_cell(row.mu) + ',' + dec_approx(row.mu) + ',' +
               rat_cell(row.interval_ratio) + ',' + dec_approx(row.interval_ratio) + ',' +
               rat_cell(row.gap) + ',' + dec_approx(row.gap) + '\n';
    }
    return out;
}

}  // namespace carrylab
