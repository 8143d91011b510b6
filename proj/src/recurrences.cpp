#include "taulat/recurrences.hpp"

#include <stdexcept>

#include "taulat/errors.hpp"

namespace taulat {

namespace {

std::string site_str(const std::array<int, 3>& s) {
    return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
           std::to_string(s[2]) + ")";
}

Partition frob(std::vector<int> arms, std::vector<int> legs) {
    return Partition::from_frobenius(std::move(arms), std::move(legs));
}

} // namespace

PartitionFn partition_fn(const std::map<Partition, Rational>& values_in) {
    return [values = values_in](const Partition& lambda) {
        auto it = values.find(lambda);
        if (it == values.end()) throw MissingCoordinate(lambda.str());
        return it->second;
    };
}

PartitionFn partition_fn(const GrassmannianElement& w) {
    return [&w](const Partition& lambda) { return w.plucker(lambda); };
}

PartitionFn partition_fn(const LagrangianElement& w0) {
    return [w0](const Partition& lambda) { return w0.plucker(lambda); };
}

PartitionFn partition_fn(const HLattice& H, const LatticePoint& n) {
    return [&H, n](const Partition& lambda) { return H.at(n, lambda); };
}

PartitionFn partition_fn(const LagrangianLattice& h, const LatticePoint& nprime) {
    return [&h, nprime](const Partition& lambda) { return h.at(nprime, lambda); };
}

Rational octahedron_residual_H(const PartitionFn& v) {
    return v(Partition{}) * v(Partition{2, 2}) - v(Partition{1}) * v(Partition{2, 1}) +
           v(Partition{2}) * v(Partition{1, 1});
}

OctahedronGrid::OctahedronGrid(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ == b_ || b_ == c_ || a_ == c_)
        throw std::invalid_argument("OctahedronGrid: spacings a, b, c must be distinct");
}

const Rational& OctahedronGrid::at(const Site& s) const {
    auto it = values_.find(s);
    if (it == values_.end()) throw MissingValue("grid site " + site_str(s));
    return it->second;
}

void OctahedronGrid::set(const Site& s, Rational value) {
    values_[s] = std::move(value);
}

Rational OctahedronGrid::residual(const Site& base) const {
    const auto [l, m, n] = base;
    return a_ * (b_ - c_) * at({l + 1, m, n}) * at({l, m + 1, n + 1}) +
           b_ * (c_ - a_) * at({l, m + 1, n}) * at({l + 1, m, n + 1}) +
           c_ * (a_ - b_) * at({l, m, n + 1}) * at({l + 1, m + 1, n});
}

Rational OctahedronGrid::propagate(const Site& target) {
    const auto [L, M, N] = target;
    const Site opposite{L + 1, M - 1, N - 1};
    const Rational divisor = a_ * (b_ - c_) * at(opposite);
    if (divisor.is_zero())
        throw DegenerateEvaluation("octahedron divisor at " + site_str(opposite));
    const Rational rhs = b_ * (c_ - a_) * at({L, M, N - 1}) * at({L + 1, M - 1, N}) +
                         c_ * (a_ - b_) * at({L, M - 1, N}) * at({L + 1, M, N - 1});
    Rational value = -rhs / divisor;
    set(target, value);
    return value;
}

std::array<Rational, 7> kappa_residuals(const PartitionFn& v, int i, int j, int k) {
    if (!(0 <= i && i < j && j < k))
        throw std::invalid_argument("kappa_residuals: need 0 <= i < j < k");

    const Rational e = v(Partition{});
    const Rational ii = v(frob({i}, {i})), jj = v(frob({j}, {j})), kk = v(frob({k}, {k}));
    const Rational ij = v(frob({i}, {j})), jk = v(frob({j}, {k})), ki = v(frob({k}, {i}));
    const Rational ji = v(frob({j}, {i})), kj = v(frob({k}, {j})), ik = v(frob({i}, {k}));
    const Rational kj_kj = v(frob({k, j}, {k, j}));
    const Rational ki_ki = v(frob({k, i}, {k, i}));
    const Rational ji_ji = v(frob({j, i}, {j, i}));
    const Rational ki_ji = v(frob({k, i}, {j, i}));
    const Rational ji_kj = v(frob({j, i}, {k, j}));
    const Rational kj_ki = v(frob({k, j}, {k, i}));
    const Rational ji_ki = v(frob({j, i}, {k, i}));
    const Rational kj_ji = v(frob({k, j}, {j, i}));
    const Rational ki_kj = v(frob({k, i}, {k, j}));
    const Rational kji = v(frob({k, j, i}, {k, j, i}));

    const Rational diag = ii * jj * kk;
    const Rational cyc = ij * jk * ki;
    const Rational cycT = ji * kj * ik;

    std::array<Rational, 7> out;
    out[0] = e * (ii * kj_kj + jk * ki_ji) - diag + cyc;
    out[1] = e * (jj * ki_ki - ki * ji_kj) - diag + cyc;
    out[2] = e * (kk * ji_ji + ij * kj_ki) - diag + cyc;
    out[3] = e * (ii * kj_kj + kj * ji_ki) - diag + cycT;
    out[4] = e * (jj * ki_ki - ik * kj_ji) - diag + cycT;
    out[5] = e * (kk * ji_ji + ji * ki_kj) - diag + cycT;
    out[6] = e * e * kji * cyc - cyc * cyc +
             cyc * (Rational(2) * diag - e * (ii * kj_kj + jj * ki_ki + kk * ji_ji)) -
             (ii * jj - e * ji_ji) * (ii * kk - e * ki_ki) * (jj * kk - e * kj_kj);
    return out;
}

const Rational& HexahedronState::get(const std::map<Site, Rational>& m, const Site& s) const {
    auto it = m.find(s);
    if (it == m.end()) throw MissingValue("hexahedron site " + site_str(s));
    return it->second;
}

namespace {

struct HexInputs {
    Rational h0, h1, h2, h3, h12, h13, h23;
    Rational x0, y0, z0;
};

HexInputs gather(const HexahedronState& st, const HexahedronState::Site& b) {
    HexInputs in;
    in.h0 = st.get(st.h, b);
    in.h1 = st.get(st.h, {b[0] + 1, b[1], b[2]});
    in.h2 = st.get(st.h, {b[0], b[1] + 1, b[2]});
    in.h3 = st.get(st.h, {b[0], b[1], b[2] + 1});
    in.h12 = st.get(st.h, {b[0] + 1, b[1] + 1, b[2]});
    in.h13 = st.get(st.h, {b[0] + 1, b[1], b[2] + 1});
    in.h23 = st.get(st.h, {b[0], b[1] + 1, b[2] + 1});
    in.x0 = st.get(st.hx, b);
    in.y0 = st.get(st.hy, b);
    in.z0 = st.get(st.hz, b);
    return in;
}

// Right-hand sides shared by residual check and propagation.
Rational side_rhs(const HexInputs& in, const Rational& adjacent, const Rational& opposite) {
    return in.h0 * adjacent * opposite + in.h1 * in.h2 * in.h3 + in.x0 * in.y0 * in.z0;
}

Rational top_rhs(const HexInputs& in) {
    const Rational xyz = in.x0 * in.y0 * in.z0;
    return xyz * xyz +
           xyz * (Rational(2) * in.h1 * in.h2 * in.h3 +
                  in.h0 * (in.h1 * in.h23 + in.h2 * in.h13 + in.h3 * in.h12)) +
           (in.h1 * in.h2 + in.h0 * in.h12) * (in.h1 * in.h3 + in.h0 * in.h13) *
               (in.h2 * in.h3 + in.h0 * in.h23);
}

} // namespace

std::array<Rational, 4> hexahedron_residuals(const HexahedronState& state,
                                             const HexahedronState::Site& base) {
    const HexInputs in = gather(state, base);
    const Rational x1 = state.get(state.hx, {base[0] + 1, base[1], base[2]});
    const Rational y2 = state.get(state.hy, {base[0], base[1] + 1, base[2]});
    const Rational z3 = state.get(state.hz, {base[0], base[1], base[2] + 1});
    const Rational h123 = state.get(state.h, {base[0] + 1, base[1] + 1, base[2] + 1});

    std::array<Rational, 4> out;
    out[0] = in.h0 * in.x0 * x1 - side_rhs(in, in.h1, in.h23);
    out[1] = in.h0 * in.y0 * y2 - side_rhs(in, in.h2, in.h13);
    out[2] = in.h0 * in.z0 * z3 - side_rhs(in, in.h3, in.h12);
    out[3] = in.h0 * in.h0 * in.x0 * in.y0 * in.z0 * h123 - top_rhs(in);
    return out;
}

std::array<Rational, 4> hexahedron_propagate(HexahedronState& state,
                                             const HexahedronState::Site& base) {
    const HexInputs in = gather(state, base);
    const Rational dx = in.h0 * in.x0;
    const Rational dy = in.h0 * in.y0;
    const Rational dz = in.h0 * in.z0;
    const Rational dtop = in.h0 * in.h0 * in.x0 * in.y0 * in.z0;
    if (dx.is_zero() || dy.is_zero() || dz.is_zero() || dtop.is_zero())
        throw DegenerateEvaluation("hexahedron divisor at base " + site_str(base));

    std::array<Rational, 4> out;
    out[0] = side_rhs(in, in.h1, in.h23) / dx;
    out[1] = side_rhs(in, in.h2, in.h13) / dy;
    out[2] = side_rhs(in, in.h3, in.h12) / dz;
    out[3] = top_rhs(in) / dtop;

    state.hx[{base[0] + 1, base[1], base[2]}] = out[0];
    state.hy[{base[0], base[1] + 1, base[2]}] = out[1];
    state.hz[{base[0], base[1], base[2] + 1}] = out[2];
    state.h[{base[0] + 1, base[1] + 1, base[2] + 1}] = out[3];
    return out;
}

Rational kashaev_residual(const Rational& h, const Rational& hi, const Rational& hj,
                          const Rational& hk, const Rational& hij, const Rational& hik,
                          const Rational& hjk, const Rational& hijk) {
    return h * h * hijk * hijk + hi * hi * hjk * hjk + hj * hj * hik * hik +
           hk * hk * hij * hij -
           Rational(2) * h * hijk * (hi * hjk + hj * hik + hk * hij) -
           Rational(2) * (hi * hj * hik * hjk + hj * hk * hij * hik + hi * hk * hij * hjk) +
           Rational(4) * h * hij * hik * hjk + Rational(4) * hi * hj * hk * hijk;
}

KashaevRoots kashaev_solve(const Rational& h, const Rational& hi, const Rational& hj,
                           const Rational& hk, const Rational& hij, const Rational& hik,
                           const Rational& hjk) {
    const Rational A = h * h;
    if (A.is_zero())
        throw DegenerateEvaluation("kashaev_solve: leading coefficient h^2 is zero");
    const Rational B =
        Rational(4) * hi * hj * hk - Rational(2) * h * (hi * hjk + hj * hik + hk * hij);
    const Rational C = hi * hi * hjk * hjk + hj * hj * hik * hik + hk * hk * hij * hij -
                       Rational(2) * (hi * hj * hik * hjk + hj * hk * hij * hik +
                                      hi * hk * hij * hjk) +
                       Rational(4) * h * hij * hik * hjk;

    KashaevRoots roots;
    roots.discriminant = B * B - Rational(4) * A * C;
    Rational s;
    if (!roots.discriminant.sqrt_if_square(s)) return roots;
    roots.rational = true;
    roots.first = (-B - s) / (Rational(2) * A);
    roots.second = (-B + s) / (Rational(2) * A);
    return roots;
}

Rational varkappa_residual(const PartitionFn& v, int i, int j, int k) {
    if (!(0 <= i && i < j && j < k))
        throw std::invalid_argument("varkappa_residual: need 0 <= i < j < k");
    return kashaev_residual(v(Partition{}), v(frob({i}, {i})), v(frob({j}, {j})),
                            v(frob({k}, {k})), v(frob({j, i}, {j, i})),
                            v(frob({k, i}, {k, i})), v(frob({k, j}, {k, j})),
                            v(frob({k, j, i}, {k, j, i})));
}

} // namespace taulat
