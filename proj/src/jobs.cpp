#include "taulat/jobs.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>

#include "taulat/errors.hpp"

namespace taulat::jobs {

namespace {

Rational parse_rational_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational as \"p/q\" string, got " + j.dump());
}

Matrix parse_matrix_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw std::invalid_argument("matrix rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = parse_rational_json(j[i][c]);
    }
    return m;
}

std::map<int, Rational> parse_indexed_rationals(const json& j) {
    std::map<int, Rational> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[std::stoi(it.key())] = parse_rational_json(it.value());
    return out;
}

LatticePoint parse_lattice_point(const json& j) {
    LatticePoint p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const int c = it.value().get<int>();
        p.add(std::stoi(it.key()), c);
    }
    return p;
}

json lattice_point_json(const LatticePoint& p) {
    json j = json::object();
    for (auto [i, c] : p.support()) j[std::to_string(i)] = c;
    return j;
}

ElementSpec parse_element(const json& spec_in) {
    json spec = spec_in;
    ElementSpec e;
    if (spec.contains("fixture")) {
        e.name = spec["fixture"].get<std::string>();
        spec = JobConfig::fixture_element(e.name);
    }
    e.matrix = parse_matrix_json(spec.at("matrix"));
    e.k = spec.value("k", 0);
    if (e.k < 1) throw std::invalid_argument("element: k must be a positive integer");
    if (spec.contains("n")) {
        e.kind = ElementSpec::Kind::homogeneous;
        e.n = spec["n"].get<int>();
        if (e.matrix.rows() != static_cast<std::size_t>(e.n) ||
            e.matrix.cols() != static_cast<std::size_t>(e.k))
            throw std::invalid_argument("element: matrix must be n x k");
    } else {
        e.kind = ElementSpec::Kind::affine;
        e.n = 2 * e.k;
        e.symmetric = spec.value("symmetric", false);
        if (e.matrix.rows() != static_cast<std::size_t>(e.k) ||
            e.matrix.cols() != static_cast<std::size_t>(e.k))
            throw std::invalid_argument("element: affine matrix must be k x k");
        if (e.symmetric && !e.matrix.is_symmetric())
            throw std::invalid_argument("element: symmetric flag requires M == M^T");
    }
    return e;
}

std::string describe(const Matrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += m.at(i, j).str() + ",";
    return s;
}

std::string digest_of(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CheckRecord make_record(const std::string& check, const std::string& inputs,
                        const Rational& residual, long timing) {
    CheckRecord rec;
    rec.check = check;
    rec.digest = digest_of(inputs);
    rec.residual = residual.str_explicit();
    rec.pass = residual.is_zero();
    rec.timing = timing;
    return rec;
}

// Equality check recorded as a residual (lhs - rhs).
CheckRecord make_equality_record(const std::string& check, const std::string& inputs,
                                 const Rational& lhs, const Rational& rhs, long timing) {
    return make_record(check, inputs, lhs - rhs, timing);
}

using JobFn = std::function<std::vector<CheckRecord>()>;

std::vector<CheckRecord> run_jobs(const std::vector<JobFn>& fns) {
    std::vector<std::vector<CheckRecord>> results(fns.size());
    std::vector<std::exception_ptr> errors(fns.size());
    std::atomic<std::size_t> next{0};
    const int workers = std::min<int>(worker_count(), static_cast<int>(fns.size()) > 0
                                                          ? static_cast<int>(fns.size())
                                                          : 1);
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= fns.size()) return;
            try {
                results[i] = fns[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    std::vector<CheckRecord> flat;
    for (auto& r : results)
        for (auto& rec : r) flat.push_back(std::move(rec));
    return flat;
}

int default_sweeps(const std::string& suite) {
    if (suite == "shift-lemma") return 10;
    if (suite == "addition" || suite == "ckp-symmetry" || suite == "kashaev") return 6;
    if (suite == "hexahedron") return 4;
    return 5;
}

struct SuiteContext {
    const JobConfig& cfg;

    int sweeps(const std::string& suite) const {
        auto it = cfg.sweeps.find(suite);
        return it != cfg.sweeps.end() ? it->second : default_sweeps(suite);
    }
    Rng rng(const std::string& suite, int iteration) const {
        return Rng(derive_seed(cfg.seed, suite, static_cast<std::uint64_t>(iteration)));
    }
    // Config element for iteration 0 when compatible, random otherwise.
    GrassmannianElement grassmannian_for(Rng& g, int iteration, int k, int n) const {
        if (iteration == 0 && cfg.element) {
            const GrassmannianElement w = cfg.element->grassmannian();
            if (w.k() == k && w.n() == n) return w;
        }
        return random_element(g, k, n);
    }
    Matrix affine_for(Rng& g, int iteration, int k) const {
        if (iteration == 0 && cfg.element && cfg.element->kind == ElementSpec::Kind::affine &&
            cfg.element->k == k)
            return cfg.element->matrix;
        return random_symmetric_matrix(g, k);
    }
    TimeVector base_time(int truncation) const {
        TimeVector t(cfg.truncation > 0 ? std::max(cfg.truncation, truncation) : truncation);
        for (std::size_t j = 0; j < cfg.base_time.size(); ++j)
            t.set(static_cast<int>(j) + 1, cfg.base_time[j]);
        return t;
    }
};

// ----- verify suites ------------------------------------------------------

std::vector<CheckRecord> plucker_iteration(const SuiteContext& ctx, int it) {
    Rng g = ctx.rng("plucker", it);
    const int k = ctx.cfg.element ? ctx.cfg.element->k : 2;
    const int n = ctx.cfg.element ? ctx.cfg.element->n : 4;
    const GrassmannianElement w = ctx.grassmannian_for(g, it, k, n);

    auto relations = all_plucker_relation_indices(k, n);
    if (relations.size() > 512) {
        auto sample = short_plucker_relation_indices(k, n);
        std::uniform_int_distribution<std::size_t> pick(0, relations.size() - 1);
        for (int s = 0; s < 200; ++s) sample.push_back(relations[pick(g)]);
        relations = std::move(sample);
    }
    Rational residual(0);
    long work = 0;
    const CoordinateFn coords = coordinates_of(w);
    for (const auto& [I, J] : relations) {
        ++work;
        const Rational r = plucker_relation_residual(coords, I, J);
        if (!r.is_zero()) {
            residual = r;
            break;
        }
    }
    return {make_record("plucker/residual-sweep",
                        "it=" + std::to_string(it) + ";W=" + describe(w.coordinates()),
                        residual, work)};
}

std::vector<CheckRecord> giambelli_iteration(const SuiteContext& ctx, int it) {
    Rng g = ctx.rng("giambelli", it);
    const int k = ctx.cfg.element ? ctx.cfg.element->k : 2;
    const int n = ctx.cfg.element ? ctx.cfg.element->n : 4;
    GrassmannianElement w = ctx.grassmannian_for(g, it, k, n);
    while (w.plucker(Partition{}).is_zero()) // needs the big cell
        w = random_element(g, k, n);

    std::map<Partition, Rational> hooks;
    for (int a = 0; a <= n - k - 1; ++a)
        for (int b = 0; b <= k - 1; ++b)
            hooks[Partition::hook(a, b)] = w.plucker(Partition::hook(a, b));
    const Rational pi_empty = w.plucker(Partition{});

    Rational residual(0);
    long work = 0;
    for (const Partition& lambda : partitions_in_rectangle(k, n - k)) {
        ++work;
        const Rational diff = giambelli_xi(hooks, pi_empty, lambda) - w.plucker(lambda);
        if (!diff.is_zero()) {
            residual = diff;
            break;
        }
    }
    return {make_record("giambelli/vs-minors",
                        "it=" + std::to_string(it) + ";W=" + describe(w.coordinates()),
                        residual, work)};
}

std::vector<CheckRecord> addition_iteration(const SuiteContext& ctx, int it) {
    Rng g = ctx.rng("addition", it);
    const int k_add = 2 + (it % 2);
    const int k = ctx.cfg.element ? ctx.cfg.element->k : 2;
    const int n = ctx.cfg.element ? ctx.cfg.element->n : 4;
    const TauEvaluator tau(ctx.grassmannian_for(g, it, k, n));
    const TimeVector t = ctx.base_time(tau.min_truncation() + 1);

    auto params = random_distinct_rationals(g, 2 * k_add);
    std::vector<Rational> xs(params.begin(), params.begin() + (k_add - 1));
    std::vector<Rational> ys(params.begin() + (k_add - 1), params.end());
    const Rational residual = addition_formula_residual(tau, t, xs, ys);
    std::string inputs = "it=" + std::to_string(it) + ";k=" + std::to_string(k_add);
    for (const auto& p : params) inputs += ";" + p.str();
    return {make_record("addition/residual", inputs, residual, 2 * (k_add + 1))};
}

std::vector<CheckRecord> ckp_iteration(const SuiteContext& ctx, int it) {
    Rng g = ctx.rng("ckp-symmetry", it);
    const int k = (it == 0 && ctx.cfg.element &&
                   ctx.cfg.element->kind == ElementSpec::Kind::affine)
                      ? ctx.cfg.element->k
                      : 2 + (it % 2);
    Matrix M = ctx.affine_for(g, it, k);
    const TimeVector t = [&] {
        TimeVector base = ctx.base_time(2 * k);
        bool all_zero = true;
        for (const auto& e : base.entries())
            if (!e.is_zero()) all_zero = false;
        return all_zero ? random_time_vector(g, 2 * k) : base;
    }();
    const TauEvaluator tau(big_cell_embedding(M));
    const Rational residual = tau(t) - tau(t.tilde());
    return {make_record("ckp-symmetry/tau-tilde",
                        "it=" + std::to_string(it) + ";M=" + describe(M), residual, 2)};
}

std::vector<CheckRecord> shift_lemma_iteration(const SuiteContext& ctx, int it) {
    Rng g = ctx.rng("shift-lemma", it);
    const int k = ctx.cfg.element ? ctx.cfg.element->k : 2;
    const int n = ctx.cfg.element ? ctx.cfg.element->n : 4;
    const GrassmannianElement w = ctx.grassmannian_for(g, it, k, n);
    const LatticePoint point = random_a_point(g, -2, 2);
    std::uniform_int_distribution<int> pick_i(-2, 2);
    const int i = pick_i(g);
    HLattice H(w, random_x_parameters(g, -3, 3), ctx.base_time(n));
    const Rational residual = shift_lemma_residual(H, point, i);
    return {make_record("shift-lemma/base-shift",
                        "it=" + std::to_string(it) + ";n=" + point.str() +
                            ";i=" + std::to_string(i),
                        residual, H.evaluations())};
}

std::vector<CheckRecord> determinant_formula_iteration(const SuiteContext& ctx, int it) {
    Rng g = ctx.rng("determinant-formula", it);
    const int k = ctx.cfg.element ? ctx.cfg.element->k : 2;
    const int n = ctx.cfg.element ? ctx.cfg.element->n : 4;
    const GrassmannianElement w = ctx.grassmannian_for(g, it, k, n);
    const int rank = 1 + (it % 3);

    // random strictly decreasing Frobenius data in [0, 3]
    auto pick_frobenius = [&g, rank] {
        std::vector<int> vals{0, 1, 2, 3};
        std::shuffle(vals.begin(), vals.end(), g);
        vals.resize(static_cast<std::size_t>(rank));
        std::sort(vals.rbegin(), vals.rend());
        return vals;
    };
    const auto arms = pick_frobenius();
    const auto legs = pick_frobenius();
    const Partition lambda = Partition::from_frobenius(arms, legs);

    const LatticePoint point = random_a_point(g, -2, 2);
    HLattice H(w, random_x_parameters(g, -5, 4), ctx.base_time(n));

    const Rational base = H.at(point);
    if (base.is_zero())
        throw DegenerateEvaluation("determinant-formula base value at " + point.str());
    Matrix ratios(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rank; ++c) {
            LatticePoint shifted = point;
            shifted.add(arms[static_cast<std::size_t>(r)], 1);
            shifted.add(-legs[static_cast<std::size_t>(c)] - 1, -1);
            ratios.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                H.at(shifted) / base;
        }
    const Rational residual = H.at(point, lambda) / base - ratios.det();
    return {make_record("determinant-formula/rank-" + std::to_string(rank),
                        "it=" + std::to_string(it) + ";lambda=" + lambda.str() +
                            ";n=" + point.str(),
                        residual, H.evaluations())};
}

std::vector<CheckRecord> octahedron_iteration(const SuiteContext& ctx, int it) {
    Rng g = ctx.rng("octahedron", it);
    std::vector<CheckRecord> out;

    // H-form residual on pipeline data
    const int k = ctx.cfg.element ? ctx.cfg.element->k : 2;
    const int n = ctx.cfg.element ? ctx.cfg.element->n : 4;
    const GrassmannianElement w = ctx.grassmannian_for(g, it, k, n);
    const LatticePoint point = random_a_point(g, -2, 1);
    HLattice H(w, random_x_parameters(g, -2, 1), ctx.base_time(n));
    out.push_back(make_record("octahedron/h-form-residual",
                              "it=" + std::to_string(it) + ";n=" + point.str(),
                              octahedron_residual_H(partition_fn(H, point)),
                              H.evaluations()));

    if (it == 0) {
        // coefficient identity of the trivial solution
        const auto abc = random_distinct_rationals(g, 3);
        const Rational coeff = abc[0] * (abc[1] - abc[2]) + abc[1] * (abc[2] - abc[0]) +
                               abc[2] * (abc[0] - abc[1]);
        out.push_back(make_record("octahedron/coefficient-identity",
                                  abc[0].str() + ";" + abc[1].str() + ";" + abc[2].str(),
                                  coeff, 1));

        // short propagation cross-checked against direct evaluation
        std::vector<Rational> spac = ctx.cfg.abc;
        if (spac.size() != 3) {
            spac = random_distinct_rationals(g, 3);
            for (auto& s : spac)
                if (s.is_zero()) s = Rational(5); // keep the divisor coefficient alive
        }
        OctahedronGrid grid(spac[0], spac[1], spac[2]);
        const TauEvaluator tau(w);
        const TimeVector t0 = ctx.base_time(n);
        auto direct = [&](int l, int m, int nn) {
            TimeVector t = miwa_shift(t0, spac[0], l);
            t = miwa_shift(t, spac[1], m);
            t = miwa_shift(t, spac[2], nn);
            return tau(t);
        };
        const int R = 2;
        for (int l = -R; l <= R; ++l)
            for (int m = -R; m <= R; ++m)
                for (int nn = -R; nn <= R; ++nn)
                    if (OctahedronGrid::level({l, m, nn}) <= 0)
                        grid.set({l, m, nn}, direct(l, m, nn));
        Rational residual(0);
        long produced = 0;
        for (int level = 1; level <= 2 && residual.is_zero(); ++level)
            for (int l = -R; l <= R && residual.is_zero(); ++l)
                for (int m = -R; m <= R; ++m)
                    for (int nn = -R; nn <= R; ++nn) {
                        const OctahedronGrid::Site s{l, m, nn};
                        if (OctahedronGrid::level(s) != level) continue;
                        if (!grid.has({l + 1, m - 1, nn - 1})) continue;
                        if (!grid.has({l, m, nn - 1}) || !grid.has({l + 1, m - 1, nn}) ||
                            !grid.has({l, m - 1, nn}) || !grid.has({l + 1, m, nn - 1}))
                            continue;
                        const Rational prop = grid.propagate(s);
                        ++produced;
                        const Rational diff = prop - direct(l, m, nn);
                        if (!diff.is_zero()) {
                            residual = diff;
                            break;
                        }
                    }
        out.push_back(make_record("octahedron/propagation-vs-direct",
                                  "W=" + describe(w.coordinates()), residual, produced));
    }
    return out;
}

std::vector<CheckRecord> kappa_iteration(const SuiteContext& ctx, int it) {
    Rng g = ctx.rng("kappa", it);
    std::vector<CheckRecord> out;

    const GrassmannianElement w = ctx.grassmannian_for(g, it, 4, 8);
    const auto res = kappa_residuals(partition_fn(w), 0, 1, 2);
    Rational first(0);
    for (const auto& r : res)
        if (!r.is_zero()) {
            first = r;
            break;
        }
    out.push_back(make_record("kappa/minors", "it=" + std::to_string(it), first, 7));

    if (it % 3 == 0) {
        const GrassmannianElement source = random_element(g, 2, 4);
        const LatticePoint point = random_a_point(g, -2, 1);
        HLattice H(source, random_x_parameters(g, -4, 3), ctx.base_time(4));
        const auto hres = kappa_residuals(partition_fn(H, point), 0, 1, 2);
        Rational hfirst(0);
        for (const auto& r : hres)
            if (!r.is_zero()) {
                hfirst = r;
                break;
            }
        out.push_back(make_record("kappa/lattice-h", "it=" + std::to_string(it),
                                  hfirst, H.evaluations()));
    }
    return out;
}

// Loads the checkerboard values needed by the residual system at a base site.
HexahedronState hexahedron_window(const LagrangianLattice& lat,
                                  const HexahedronState::Site& base) {
    HexahedronState st;
    auto point = [&base](int d1, int d2, int d3) {
        return LatticePoint::from_b3(base[0] + d1, base[1] + d2, base[2] + d3);
    };
    const int offsets[8][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                               {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    for (const auto& o : offsets)
        st.h[{base[0] + o[0], base[1] + o[1], base[2] + o[2]}] =
            lat.checkerboard(point(o[0], o[1], o[2]), CheckerKind::plain);
    st.hx[base] = lat.checkerboard(point(0, 0, 0), CheckerKind::x);
    st.hy[base] = lat.checkerboard(point(0, 0, 0), CheckerKind::y);
    st.hz[base] = lat.checkerboard(point(0, 0, 0), CheckerKind::z);
    st.hx[{base[0] + 1, base[1], base[2]}] = lat.checkerboard(point(1, 0, 0), CheckerKind::x);
    st.hy[{base[0], base[1] + 1, base[2]}] = lat.checkerboard(point(0, 1, 0), CheckerKind::y);
    st.hz[{base[0], base[1], base[2] + 1}] = lat.checkerboard(point(0, 0, 1), CheckerKind::z);
    return st;
}

std::vector<CheckRecord> hexahedron_iteration(const SuiteContext& ctx, int it) {
    Rng g = ctx.rng("hexahedron", it);
    const int k = (it == 0 && ctx.cfg.element && ctx.cfg.element->is_affine_symmetric() &&
                   ctx.cfg.element->k >= 3)
                      ? ctx.cfg.element->k
                      : 3 + (it % 2);
    Matrix M = ctx.affine_for(g, it, k);
    if (!M.is_symmetric()) M = random_symmetric_matrix(g, k);
    const LagrangianElement w0(k, M);
    LagrangianLattice lat(w0, random_y_parameters(g, 4),
                          CkpTimeVector(ctx.base_time(2 * k)));

    const HexahedronState::Site base = (it % 2 == 0) ? HexahedronState::Site{0, 0, 0}
                                                     : HexahedronState::Site{1, 0, 0};
    HexahedronState st = hexahedron_window(lat, base);
    const auto res = hexahedron_residuals(st, base);
    Rational first(0);
    for (const auto& r : res)
        if (!r.is_zero()) {
            first = r;
            break;
        }
    std::vector<CheckRecord> out;
    out.push_back(make_record("hexahedron/residuals",
                              "it=" + std::to_string(it) + ";M=" + describe(M), first,
                              lat.evaluations()));

    if (it < 2) {
        // one-step propagation must reproduce the direct checkerboard values
        HexahedronState partial = st;
        partial.hx.erase({base[0] + 1, base[1], base[2]});
        partial.hy.erase({base[0], base[1] + 1, base[2]});
        partial.hz.erase({base[0], base[1], base[2] + 1});
        partial.h.erase({base[0] + 1, base[1] + 1, base[2] + 1});
        const auto produced = hexahedron_propagate(partial, base);
        const Rational diff =
            (produced[0] - st.hx.at({base[0] + 1, base[1], base[2]})) +
            (produced[1] - st.hy.at({base[0], base[1] + 1, base[2]})) +
            (produced[2] - st.hz.at({base[0], base[1], base[2] + 1})) +
            (produced[3] - st.h.at({base[0] + 1, base[1] + 1, base[2] + 1}));
        out.push_back(make_record("hexahedron/propagation-vs-direct",
                                  "it=" + std::to_string(it), diff, lat.evaluations()));
    }
    return out;
}

std::vector<CheckRecord> kashaev_iteration(const SuiteContext& ctx, int it) {
    Rng g = ctx.rng("kashaev", it);
    std::vector<CheckRecord> out;
    const Rational one(1);

    if (it == 0) {
        out.push_back(make_record("kashaev/all-ones", "ones",
                                  kashaev_residual(one, one, one, one, one, one, one, one),
                                  1));
        const auto roots = kashaev_solve(one, one, one, one, one, one, one);
        const Rational solve_residual = roots.rational
                                            ? (roots.first - one) * (roots.first - one) +
                                                  (roots.second - one) * (roots.second - one)
                                            : Rational(1);
        out.push_back(make_record("kashaev/solve-all-ones", "ones", solve_residual, 1));
    }

    // principal minors of a random symmetric 3x3 matrix
    const Matrix M = random_symmetric_matrix(g, 3);
    auto minor = [&M](std::vector<std::size_t> idx) {
        return M.submatrix(idx, idx).det();
    };
    out.push_back(make_record(
        "kashaev/principal-minors", "it=" + std::to_string(it) + ";M=" + describe(M),
        kashaev_residual(one, minor({0}), minor({1}), minor({2}), minor({0, 1}),
                         minor({0, 2}), minor({1, 2}), minor({0, 1, 2})),
        8));

    if (it % 2 == 1) {
        // lattice h-data from a Lagrangian element
        const int k = 4;
        const LagrangianElement w0(k, random_symmetric_matrix(g, k));
        LagrangianLattice lat(w0, random_y_parameters(g, 4),
                              CkpTimeVector(ctx.base_time(2 * k)));
        const LatticePoint nprime = random_b_point(g, 3);
        auto hval = [&](int c1, int c2, int c3) {
            return lat.at(nprime + LatticePoint::from_b3(c1, c2, c3));
        };
        out.push_back(make_record(
            "kashaev/lattice-h", "it=" + std::to_string(it) + ";n=" + nprime.str(),
            kashaev_residual(hval(0, 0, 0), hval(1, 0, 0), hval(0, 1, 0), hval(0, 0, 1),
                             hval(1, 1, 0), hval(1, 0, 1), hval(0, 1, 1), hval(1, 1, 1)),
            lat.evaluations()));
    }
    return out;
}

std::vector<CheckRecord> varkappa_iteration(const SuiteContext& ctx, int it) {
    Rng g = ctx.rng("varkappa", it);
    std::vector<CheckRecord> out;
    if (it == 0) {
        const PartitionFn ones = [](const Partition&) { return Rational(1); };
        out.push_back(
            make_record("varkappa/all-ones", "ones", varkappa_residual(ones, 0, 1, 2), 1));
    }
    const int k = 4;
    Matrix M = (it == 0 && ctx.cfg.element && ctx.cfg.element->is_affine_symmetric() &&
                ctx.cfg.element->k == k)
                   ? ctx.cfg.element->matrix
                   : random_symmetric_matrix(g, k);
    const LagrangianElement w0(k, M);
    const PartitionFn coords = [&w0](const Partition& lambda) { return w0.plucker(lambda); };
    out.push_back(make_record("varkappa/lagrangian-minors",
                              "it=" + std::to_string(it) + ";M=" + describe(M),
                              varkappa_residual(coords, 0, 1, 2), 8));
    return out;
}

} // namespace

// ----- public API -----------------------------------------------------------

GrassmannianElement ElementSpec::grassmannian() const {
    if (kind == Kind::homogeneous) return GrassmannianElement(k, n, matrix);
    return big_cell_embedding(matrix);
}

LagrangianElement ElementSpec::lagrangian() const {
    if (!is_affine_symmetric())
        throw std::invalid_argument("element: Lagrangian use requires a symmetric affine matrix");
    return LagrangianElement(k, matrix);
}

json JobConfig::fixture_element(const std::string& name) {
    if (name == "gr24-abcd")
        return json{{"k", 2},
                    {"n", 4},
                    {"matrix", json::array({json::array({"1", "0"}), json::array({"0", "1"}),
                                            json::array({"1", "2"}), json::array({"3", "4"})})}};
    if (name == "trivial")
        return json{{"k", 2},
                    {"n", 4},
                    {"matrix", json::array({json::array({"1", "0"}), json::array({"0", "1"}),
                                            json::array({"0", "0"}), json::array({"0", "0"})})}};
    if (name == "sym3-random") {
        Rng g(derive_seed(0xf1c7u, "sym3-random", 0));
        const Matrix M = random_symmetric_matrix(g, 3);
        json rows = json::array();
        for (std::size_t i = 0; i < 3; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < 3; ++j) row.push_back(M.at(i, j).str());
            rows.push_back(row);
        }
        return json{{"k", 3}, {"symmetric", true}, {"matrix", rows}};
    }
    if (name == "asym2-control")
        return json{{"k", 2},
                    {"matrix", json::array({json::array({"1", "2"}), json::array({"3", "4"})})}};
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

JobConfig JobConfig::from_json(const json& j) {
    JobConfig cfg;
    cfg.schema_version = j.value("schema_version", 1);
    if (cfg.schema_version != 1)
        throw std::invalid_argument("unsupported schema_version");
    cfg.mode = j.value("mode", "verify");
    if (j.contains("element")) cfg.element = parse_element(j["element"]);
    if (j.contains("parameters")) {
        const json& p = j["parameters"];
        if (p.contains("x")) cfg.x_params = parse_indexed_rationals(p["x"]);
        if (p.contains("y")) cfg.y_params = parse_indexed_rationals(p["y"]);
        if (p.contains("abc"))
            for (const auto& v : p["abc"]) cfg.abc.push_back(parse_rational_json(v));
    }
    if (j.contains("base_time"))
        for (const auto& v : j["base_time"]) cfg.base_time.push_back(parse_rational_json(v));
    cfg.truncation = j.value("truncation", 0);
    if (j.contains("suites"))
        for (const auto& s : j["suites"]) cfg.suites.push_back(s.get<std::string>());
    cfg.seed = j.value("seed", 1ull);
    if (j.contains("sweeps"))
        for (auto it = j["sweeps"].begin(); it != j["sweeps"].end(); ++it)
            cfg.sweeps[it.key()] = it.value().get<int>();
    cfg.recurrence = j.value("recurrence", "octahedron");
    cfg.steps = j.value("steps", 1);
    if (j.contains("window")) cfg.window_radius = j["window"].value("radius", 2);
    if (j.contains("lattice_points"))
        for (const auto& p : j["lattice_points"])
            cfg.lattice_points.push_back(parse_lattice_point(p));
    cfg.flip_even_times = j.value("flip_even_times", false);
    if (j.contains("octahedron_seed"))
        for (const auto& entry : j["octahedron_seed"]) {
            const auto& site = entry.at("site");
            cfg.octahedron_seed[{site[0].get<int>(), site[1].get<int>(), site[2].get<int>()}] =
                parse_rational_json(entry.at("value"));
        }

    // config invariants
    if (!cfg.x_params.empty()) XParameters check_x(cfg.x_params);
    if (!cfg.y_params.empty()) YParameters check_y(cfg.y_params);
    if (!cfg.abc.empty()) {
        if (cfg.abc.size() != 3)
            throw std::invalid_argument("parameters.abc must have exactly three entries");
        if (cfg.abc[0] == cfg.abc[1] || cfg.abc[1] == cfg.abc[2] || cfg.abc[0] == cfg.abc[2])
            throw std::invalid_argument("parameters.abc must be pairwise distinct");
    }
    if (cfg.steps < 0) throw std::invalid_argument("steps must be >= 0");
    return cfg;
}

const std::vector<std::string> kAllSuites = {
    "plucker",     "giambelli",  "addition",           "ckp-symmetry",
    "shift-lemma", "determinant-formula", "octahedron", "kappa",
    "hexahedron",  "kashaev",    "varkappa"};

int worker_count() {
    if (const char* env = std::getenv("TAULAT_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

void Report::finalize() {
    std::sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
        return std::tie(a.check, a.digest) < std::tie(b.check, b.digest);
    });
    green = true;
    for (const auto& rec : checks)
        if (!rec.pass) green = false;
}

json Report::to_json() const {
    json out;
    out["schema_version"] = schema_version;
    out["mode"] = mode;
    out["seed"] = seed;
    out["green"] = green;
    json recs = json::array();
    for (const auto& rec : checks)
        recs.push_back(json{{"check", rec.check},
                            {"digest", rec.digest},
                            {"residual", rec.residual},
                            {"pass", rec.pass},
                            {"timing", rec.timing}});
    out["checks"] = recs;
    if (!extra.is_null()) out["extra"] = extra;
    return out;
}

Report run_verify(const JobConfig& config) {
    const SuiteContext ctx{config};
    std::vector<std::string> suites = config.suites.empty() ? kAllSuites : config.suites;
    for (const auto& s : suites)
        if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end())
            throw std::invalid_argument("unknown suite '" + s + "'");

    std::vector<JobFn> fns;
    for (const std::string& suite : suites) {
        const int n = ctx.sweeps(suite);
        for (int it = 0; it < n; ++it) {
            if (suite == "plucker")
                fns.push_back([&ctx, it] { return plucker_iteration(ctx, it); });
            else if (suite == "giambelli")
                fns.push_back([&ctx, it] { return giambelli_iteration(ctx, it); });
            else if (suite == "addition")
                fns.push_back([&ctx, it] { return addition_iteration(ctx, it); });
            else if (suite == "ckp-symmetry")
                fns.push_back([&ctx, it] { return ckp_iteration(ctx, it); });
            else if (suite == "shift-lemma")
                fns.push_back([&ctx, it] { return shift_lemma_iteration(ctx, it); });
            else if (suite == "determinant-formula")
                fns.push_back([&ctx, it] { return determinant_formula_iteration(ctx, it); });
            else if (suite == "octahedron")
                fns.push_back([&ctx, it] { return octahedron_iteration(ctx, it); });
            else if (suite == "kappa")
                fns.push_back([&ctx, it] { return kappa_iteration(ctx, it); });
            else if (suite == "hexahedron")
                fns.push_back([&ctx, it] { return hexahedron_iteration(ctx, it); });
            else if (suite == "kashaev")
                fns.push_back([&ctx, it] { return kashaev_iteration(ctx, it); });
            else if (suite == "varkappa")
                fns.push_back([&ctx, it] { return varkappa_iteration(ctx, it); });
        }
    }

    Report report;
    report.mode = "verify";
    report.seed = config.seed;
    report.checks = run_jobs(fns);
    report.finalize();
    return report;
}

namespace {

Report propagate_octahedron(const JobConfig& config) {
    Report report;
    report.mode = "propagate";
    report.seed = config.seed;

    std::vector<Rational> abc = config.abc;
    if (abc.empty()) abc = {Rational(1), Rational(2), Rational(3)};
    OctahedronGrid grid(abc[0], abc[1], abc[2]);

    std::optional<TauEvaluator> tau;
    TimeVector t0;
    if (config.element) {
        tau.emplace(config.element->grassmannian());
        const int T = std::max(config.truncation, tau->min_truncation() + 1);
        t0 = TimeVector(T);
        for (std::size_t j = 0; j < config.base_time.size(); ++j)
            t0.set(static_cast<int>(j) + 1, config.base_time[j]);
        for (const auto& s : abc)
            if (s.is_zero())
                throw std::invalid_argument("octahedron spacings must be nonzero for tau seeding");
    }
    auto direct = [&](const OctahedronGrid::Site& s) {
        TimeVector t = miwa_shift(t0, abc[0], s[0]);
        t = miwa_shift(t, abc[1], s[1]);
        t = miwa_shift(t, abc[2], s[2]);
        return (*tau)(t);
    };

    const int R = config.window_radius;
    if (tau) {
        for (int l = -R; l <= R; ++l)
            for (int m = -R; m <= R; ++m)
                for (int n = -R; n <= R; ++n)
                    if (OctahedronGrid::level({l, m, n}) <= 0) grid.set({l, m, n}, direct({l, m, n}));
    } else {
        if (config.octahedron_seed.empty())
            throw std::invalid_argument("propagate: raw octahedron seed required without element");
        for (const auto& [site, value] : config.octahedron_seed) grid.set(site, value);
    }

    json values = json::array();
    long produced = 0;
    for (int level = 1; level <= config.steps; ++level)
        for (int l = -R; l <= R; ++l)
            for (int m = -R; m <= R; ++m)
                for (int n = -R; n <= R; ++n) {
                    const OctahedronGrid::Site s{l, m, n};
                    if (OctahedronGrid::level(s) != level || grid.has(s)) continue;
                    const OctahedronGrid::Site need[5] = {{l + 1, m - 1, n - 1},
                                                          {l, m, n - 1},
                                                          {l + 1, m - 1, n},
                                                          {l, m - 1, n},
                                                          {l + 1, m, n - 1}};
                    bool ready = true;
                    for (const auto& c : need)
                        if (!grid.has(c)) ready = false;
                    if (!ready) continue;
                    const Rational value = grid.propagate(s);
                    ++produced;
                    values.push_back(json{{"site", json::array({l, m, n})},
                                          {"value", value.str()}});
                    if (tau) {
                        report.checks.push_back(make_equality_record(
                            "octahedron-propagate/cross-check",
                            "site=" + std::to_string(l) + "," + std::to_string(m) + "," +
                                std::to_string(n),
                            value, direct(s), 1));
                    }
                }
    report.extra["values"] = values;
    report.extra["produced"] = produced;
    report.finalize();
    return report;
}

Report propagate_hexahedron(const JobConfig& config) {
    Report report;
    report.mode = "propagate";
    report.seed = config.seed;
    if (!config.element || !config.element->is_affine_symmetric())
        throw std::invalid_argument(
            "propagate: hexahedron needs a symmetric affine element for the seed");

    const LagrangianElement w0 = config.element->lagrangian();
    const int k = w0.k();
    std::map<int, Rational> yvals = config.y_params;
    if (yvals.empty())
        for (int i = 1; i <= 4; ++i) yvals[i] = Rational(2 * i + 1, 2); // 3/2, 5/2, ...
    TimeVector base(std::max(config.truncation, 2 * k));
    for (std::size_t j = 0; j < config.base_time.size(); ++j)
        base.set(static_cast<int>(j) + 1, config.base_time[j]);
    LagrangianLattice lat(w0, YParameters(yvals), CkpTimeVector(base));

    const int R = config.window_radius;
    HexahedronState st;
    auto inside = [R](const HexahedronState::Site& s) {
        return std::abs(s[0]) <= R + 1 && std::abs(s[1]) <= R + 1 && std::abs(s[2]) <= R + 1;
    };
    for (int c1 = -R; c1 <= R; ++c1)
        for (int c2 = -R; c2 <= R; ++c2)
            for (int c3 = -R; c3 <= R; ++c3) {
                const int height = c1 + c2 + c3;
                const LatticePoint p = LatticePoint::from_b3(c1, c2, c3);
                if (height >= 0 && height <= 2)
                    st.h[{c1, c2, c3}] = lat.checkerboard(p, CheckerKind::plain);
                if (height == 0) {
                    st.hx[{c1, c2, c3}] = lat.checkerboard(p, CheckerKind::x);
                    st.hy[{c1, c2, c3}] = lat.checkerboard(p, CheckerKind::y);
                    st.hz[{c1, c2, c3}] = lat.checkerboard(p, CheckerKind::z);
                }
            }

    json values = json::array();
    long produced = 0;
    for (int level = 0; level < config.steps; ++level)
        for (int c1 = -R; c1 <= R; ++c1)
            for (int c2 = -R; c2 <= R; ++c2)
                for (int c3 = -R; c3 <= R; ++c3) {
                    const HexahedronState::Site s{c1, c2, c3};
                    if (c1 + c2 + c3 != level || !inside(s)) continue;
                    bool ready = st.h.count(s) && st.hx.count(s) && st.hy.count(s) &&
                                 st.hz.count(s);
                    const int off[6][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                           {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
                    for (const auto& o : off)
                        if (!st.h.count({c1 + o[0], c2 + o[1], c3 + o[2]})) ready = false;
                    if (!ready) continue;
                    const auto outv = hexahedron_propagate(st, s);
                    ++produced;
                    const LatticePoint px = LatticePoint::from_b3(c1 + 1, c2, c3);
                    const LatticePoint py = LatticePoint::from_b3(c1, c2 + 1, c3);
                    const LatticePoint pz = LatticePoint::from_b3(c1, c2, c3 + 1);
                    const LatticePoint ptop = LatticePoint::from_b3(c1 + 1, c2 + 1, c3 + 1);
                    const std::string where = std::to_string(c1) + "," + std::to_string(c2) +
                                              "," + std::to_string(c3);
                    report.checks.push_back(make_equality_record(
                        "hexahedron-propagate/cross-check-x", "base=" + where, outv[0],
                        lat.checkerboard(px, CheckerKind::x), 1));
                    report.checks.push_back(make_equality_record(
                        "hexahedron-propagate/cross-check-y", "base=" + where, outv[1],
                        lat.checkerboard(py, CheckerKind::y), 1));
                    report.checks.push_back(make_equality_record(
                        "hexahedron-propagate/cross-check-z", "base=" + where, outv[2],
                        lat.checkerboard(pz, CheckerKind::z), 1));
                    report.checks.push_back(make_equality_record(
                        "hexahedron-propagate/cross-check-top", "base=" + where, outv[3],
                        lat.checkerboard(ptop, CheckerKind::plain), 1));
                    values.push_back(json{{"base", json::array({c1, c2, c3})},
                                          {"hx", outv[0].str()},
                                          {"hy", outv[1].str()},
                                          {"hz", outv[2].str()},
                                          {"h_top", outv[3].str()}});
                }
    report.extra["values"] = values;
    report.extra["produced"] = produced;
    report.finalize();
    return report;
}

} // namespace

Report run_propagate(const JobConfig& config) {
    if (config.recurrence == "octahedron") return propagate_octahedron(config);
    if (config.recurrence == "hexahedron") return propagate_hexahedron(config);
    throw std::invalid_argument("unknown recurrence '" + config.recurrence + "'");
}

Report run_tau_eval(const JobConfig& config) {
    if (!config.element) throw std::invalid_argument("tau-eval: element required");
    Report report;
    report.mode = "tau-eval";
    report.seed = config.seed;

    const GrassmannianElement w = config.element->grassmannian();
    const TauEvaluator tau(w);
    TimeVector t(std::max(config.truncation, tau.min_truncation() + 1));
    for (std::size_t j = 0; j < config.base_time.size(); ++j)
        t.set(static_cast<int>(j) + 1, config.base_time[j]);
    if (config.flip_even_times) t = t.tilde();

    report.extra["tau"] = tau(t).str();

    if (!config.lattice_points.empty()) {
        json values = json::array();
        if (!config.y_params.empty() && config.element->is_affine_symmetric()) {
            LagrangianLattice lat(config.element->lagrangian(), YParameters(config.y_params),
                                  CkpTimeVector(t));
            for (const auto& p : config.lattice_points)
                values.push_back(json{{"point", lattice_point_json(p)},
                                      {"h", lat.at(p).str()}});
        } else {
            if (config.x_params.empty())
                throw std::invalid_argument("tau-eval: lattice points need parameters.x");
            HLattice lat(std::make_shared<TauEvaluator>(w), XParameters(config.x_params), t);
            for (const auto& p : config.lattice_points)
                values.push_back(json{{"point", lattice_point_json(p)},
                                      {"H", lat.at(p).str()}});
        }
        report.extra["lattice_values"] = values;
    }
    report.finalize();
    return report;
}

} // namespace taulat::jobs
