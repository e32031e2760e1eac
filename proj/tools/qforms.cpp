// Batch front end: every verification suite and table generator behind one
// binary with machine-readable output. JSON is the normative format; CSV and
// text are conveniences. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage error, 3 the size cap truncated the computation.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qforms/bimodule.hpp"
#include "qforms/exterior.hpp"
#include "qforms/laplace.hpp"
#include "qforms/metric.hpp"
#include "qforms/rmatrix.hpp"

using json = nlohmann::ordered_json;
using namespace qf;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncated = 3;

long max_dim_from_env() {
    const char* v = std::getenv("QFORMS_MAX_DIM");
    if (!v) return 1024;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end == v || parsed <= 0) throw DomainError("QFORMS_MAX_DIM must be a positive integer");
    return parsed;
}

long pow_dim(long base, int k) {
    long d = 1;
    for (int t = 0; t < k; ++t) d *= base;
    return d;
}

json matrix_to_json(const OpMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) entries.push_back({i, j, v.str()});
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json checks_to_json(const VerifyReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
    return checks;
}

void emit(const json& doc, const std::string& format) {
    if (format == "csv") {
        // flat documents only: arrays of scalars or arrays of uniform objects
        if (doc.is_array() && !doc.empty() && doc[0].is_object()) {
            bool first = true;
            for (auto& [key, val] : doc[0].items()) {
                std::cout << (first ? "" : ",") << key;
                first = false;
                (void)val;
            }
            std::cout << "\n";
            for (const auto& row : doc) {
                first = true;
                for (auto& [key, val] : row.items()) {
                    std::cout << (first ? "" : ",");
                    first = false;
                    (void)key;
                    if (val.is_string())
                        std::cout << '"' << val.get<std::string>() << '"';
                    else
                        std::cout << val.dump();
                }
                std::cout << "\n";
            }
        } else {
            std::cout << doc.dump() << "\n";
        }
        return;
    }
    // json (normative) and text both print the indented document
    std::cout << doc.dump(2) << "\n";
}

FormType tau_from(const std::string& s) {
    if (s == "+" || s == "plus") return FormType::Plus;
    if (s == "-" || s == "minus") return FormType::Minus;
    throw DomainError("tau must be + or -");
}

Rat rational_from(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw DomainError("not a rational: " + s);
    r.canonicalize();
    return r;
}

int run_dims(int n, int max_degree, const std::string& mode, uint64_t seed, bool seed_given,
             const std::string& tau_str, const std::string& format) {
    if (mode == "probabilistic" && !seed_given)
        throw DomainError("probabilistic mode requires --seed for reproducibility");
    Calculus calc(n);
    auto result = lambda_dims(calc, tau_from(tau_str), max_degree,
                              mode == "exact" ? RankMode::Exact : RankMode::Probabilistic,
                              seed, max_dim_from_env());
    if (result.truncated) {
        json doc{{"dims", result.dims}, {"truncated", true}};
        emit(doc, format);
        return kExitTruncated;
    }
    emit(json(result.dims), format);
    return kExitPass;
}

int run_spectrum(int n, int max_boxes, const std::string& at, bool classical,
                 const std::string& format) {
    json rows = json::array();
    bool have_at = !at.empty();
    Rat at_val;
    if (have_at) {
        at_val = rational_from(at);
        if (at_val == 0 || at_val == 1 || at_val == -1)
            throw DomainError("--at must be a nonzero rational different from +-1");
    }
    for (const auto& lambda : reduced_diagrams(n, max_boxes)) {
        if (lambda.boxes() == 0) continue;
        json row{{"diagram", lambda.str()}, {"eigenvalue", eigenvalue(lambda, n).str()}};
        if (have_at) row["value_at"] = eigenvalue(lambda, n).eval_at(at_val).get_str();
        if (classical) row["classical"] = classical_eigenvalue(lambda, n).get_str();
        rows.push_back(row);
    }
    emit(rows, format);
    return kExitPass;
}

int run_verify_metric(int n, bool perturb, const std::string& format) {
    if (pow_dim(static_cast<long>(n) * n, 3) > max_dim_from_env()) {
        emit(json{{"n", n}, {"truncated", true}}, format);
        return kExitTruncated;
    }
    Calculus calc(n);
    MetricOps ops = perturb ? MetricOps(calc, metric_data_perturbed(calc)) : MetricOps(calc);
    VerifyReport rep = ops.verify();
    json doc{{"n", n}, {"perturbed", perturb}, {"checks", checks_to_json(rep)},
             {"all_pass", rep.all_pass()}};
    emit(doc, format);
    return rep.all_pass() ? kExitPass : kExitCheckFailed;
}

int run_braid_check(int n, const std::string& format) {
    if (pow_dim(static_cast<long>(n) * n, 3) > max_dim_from_env()) {
        emit(json{{"n", n}, {"truncated", true}}, format);
        return kExitTruncated;
    }
    Calculus calc(n);
    VerifyReport rep;
    const FormType types[2] = {FormType::Plus, FormType::Minus};

    {
        OpMatrix r = rhat(n, BraidSign::Plus);
        OpMatrix id = OpMatrix::identity(n * n);
        RatFunc q = q_power(n, 1);
        bool hecke = ((r - id.scaled(q)) * (r + id.scaled(q.inverse()))).is_zero();
        rep.checks.push_back({"hecke_relation", hecke});
        bool inv = (r * rhat(n, BraidSign::Minus)) == id;
        rep.checks.push_back({"rmatrix_inverse", inv});
        OpMatrix r12 = slot_op(r, 3, 1, static_cast<long>(n));
        OpMatrix r23 = slot_op(r, 3, 2, static_cast<long>(n));
        rep.checks.push_back({"rmatrix_braid_relation", r12 * r23 * r12 == r23 * r12 * r23});
    }

    {
        bool ok = true;
        const int dim = n * n * n * n;
        for (FormType a : types)
            for (FormType b : types) {
                ok = ok && (calc.braiding(b, a, BraidSign::Plus) *
                                calc.braiding(a, b, BraidSign::Minus) ==
                            OpMatrix::identity(dim));
                ok = ok && (calc.braiding(a, b, BraidSign::Minus) *
                                calc.braiding(b, a, BraidSign::Plus) ==
                            OpMatrix::identity(dim));
            }
        rep.checks.push_back({"braiding_inverse_pairs", ok});
    }

    {
        bool ok = true;
        for (FormType a : types)
            for (FormType b : types)
                for (FormType c : types) {
                    SpaceSignature sig(n, {a, b, c});
                    for (BraidSign s : {BraidSign::Plus, BraidSign::Minus}) {
                        auto lhs = compose_adjacent(calc, sig, {1, 2, 1}, s);
                        auto rhs = compose_adjacent(calc, sig, {2, 1, 2}, s);
                        ok = ok && (lhs.matrix == rhs.matrix);
                    }
                }
        rep.checks.push_back({"braiding_braid_relation", ok});
    }

    json doc{{"n", n}, {"checks", checks_to_json(rep)}, {"all_pass", rep.all_pass()}};
    emit(doc, format);
    return rep.all_pass() ? kExitPass : kExitCheckFailed;
}

int run_rform(int n, const std::string& format) {
    RFormTable table(n);
    auto dump_table = [&](auto getter) {
        json entries = json::array();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l) {
                        const RatFunc& v = getter(i, j, k, l);
                        if (!v.is_zero()) entries.push_back({i, j, k, l, v.str()});
                    }
        return entries;
    };
    json doc{{"n", n},
             {"r_uu", dump_table([&](int i, int j, int k, int l) -> const RatFunc& {
                  return table.r_uu(i, j, k, l);
              })},
             {"r_u_Su", dump_table([&](int i, int j, int k, int l) -> const RatFunc& {
                  return table.r_u_Su(i, j, k, l);
              })},
             {"r_Su_u", dump_table([&](int i, int j, int k, int l) -> const RatFunc& {
                  return table.r_Su_u(i, j, k, l);
              })}};
    emit(doc, format);
    return kExitPass;
}

int run_hodge(int n, int k, const std::string& tau_str, const std::string& side_str,
              const std::string& sign_str, uint64_t seed, const std::string& format) {
    const long cap = max_dim_from_env();
    Calculus calc(n);
    MetricOps ops(calc);
    HodgeContext hc(ops, seed, cap);  // throws ResourceLimit past the cap
    if (k < 0 || k > hc.n0()) throw DomainError("--k must lie between 0 and the top degree");
    HodgeSide side = side_str == "right" ? HodgeSide::Right : HodgeSide::Left;
    BraidSign sign = sign_str == "-" ? BraidSign::Minus : BraidSign::Plus;
    OpMatrix h = hc.hodge(tau_from(tau_str), k, side, sign);
    json doc{{"n", n}, {"n0", hc.n0()}, {"k", k}, {"tau", tau_str},
             {"side", side_str}, {"sign", sign_str}, {"matrix", matrix_to_json(h)}};
    emit(doc, format);
    return kExitPass;
}

int run_laplace_oracle(int n, int m, const std::string& format) {
    if (m < 1 || m > 2) throw DomainError("--m must be 1 or 2 (higher projectors are out of scope)");
    VerifyReport rep;
    json values;
    if (m == 1) {
        Calculus calc(n);
        MetricOps ops(calc);
        RatFunc e1 = eigenvalue(YoungDiagram({1}), n);
        OpMatrix lap = ops.laplace_on_generators();
        bool scalar_ok = lap == OpMatrix::identity(n * n).scaled(e1);
        bool word_ok = lap == kron(OpMatrix::identity(n), word_laplace(1, n));
        rep.checks.push_back({"laplacian_is_degree_one_scalar", scalar_ok});
        rep.checks.push_back({"matches_word_operator", word_ok});
        values["[1]"] = e1.str();
    } else {
        RatFunc q = q_power(n, 1);
        OpMatrix r = rhat(n, BraidSign::Plus);
        const int d2 = n * n;
        RatFunc norm = (q + q.inverse()).inverse();
        OpMatrix p_sym = (r + OpMatrix::identity(d2).scaled(q.inverse())).scaled(norm);
        OpMatrix p_anti = (OpMatrix::identity(d2).scaled(q) - r).scaled(norm);
        OpMatrix l2 = word_laplace(2, n);
        RatFunc e_row = eigenvalue(YoungDiagram({2}), n);
        RatFunc e_col = eigenvalue(YoungDiagram({1, 1}), n);
        rep.checks.push_back({"symmetric_projector_eigenvalue", l2 * p_sym == p_sym.scaled(e_row)});
        rep.checks.push_back({"antisymmetric_projector_eigenvalue", l2 * p_anti == p_anti.scaled(e_col)});
        values["[2]"] = e_row.str();
        values["[1,1]"] = e_col.str();
    }
    json doc{{"n", n}, {"m", m}, {"checks", checks_to_json(rep)},
             {"eigenvalues", values}, {"all_pass", rep.all_pass()}};
    emit(doc, format);
    return rep.all_pass() ? kExitPass : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact operator calculus tables and verification suites"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));

    int n = 2;
    int max_degree = 4, max_boxes = 4, k = 0, m = 1;
    std::string mode = "exact", tau = "+", side = "left", sign = "+", at;
    uint64_t seed = 0;
    bool classical = false, perturb = false;

    auto* dims = app.add_subcommand("dims", "dimensions of the degree-k form spaces");
    dims->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
    dims->add_option("--max-degree", max_degree, "largest degree")->required();
    dims->add_option("--mode", mode, "rank mode")->check(CLI::IsMember({"exact", "probabilistic"}));
    auto* seed_opt = dims->add_option("--seed", seed, "PRNG seed (required in probabilistic mode)");
    dims->add_option("--tau", tau, "space type, + or -");

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalue table indexed by diagrams");
    spectrum->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
    spectrum->add_option("--max-boxes", max_boxes, "largest box count")->required();
    spectrum->add_option("--at", at, "exact rational evaluation point, e.g. 3/2");
    spectrum->add_flag("--classical", classical, "include the classical eigenvalue");

    auto* verify = app.add_subcommand("verify-metric", "metric verification suite");
    verify->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
    verify->add_flag("--perturb", perturb, "swap two diagonal entries as a negative control");

    auto* braid = app.add_subcommand("braid-check", "braiding and inverse checks");
    braid->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);

    auto* rform = app.add_subcommand("rform", "dual-pairing tables on the generators");
    rform->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);

    auto* hodge = app.add_subcommand("hodge", "Hodge operator matrix on degree k");
    hodge->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
    hodge->add_option("--k", k, "degree")->required();
    hodge->add_option("--tau", tau, "space type, + or -");
    hodge->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
    hodge->add_option("--sign", sign, "braid sign, + or -");
    hodge->add_option("--seed", seed, "seed for the top-degree scan");

    auto* oracle = app.add_subcommand("laplace-oracle", "word-level spectrum cross-check");
    oracle->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
    oracle->add_option("--m", m, "word length (1 or 2)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dims->parsed())
            return run_dims(n, max_degree, mode, seed, seed_opt->count() > 0, tau, format);
        if (spectrum->parsed()) return run_spectrum(n, max_boxes, at, classical, format);
        if (verify->parsed()) return run_verify_metric(n, perturb, format);
        if (braid->parsed()) return run_braid_check(n, format);
        if (rform->parsed()) return run_rform(n, format);
        if (hodge->parsed()) return run_hodge(n, k, tau, side, sign, seed, format);
        if (oracle->parsed()) return run_laplace_oracle(n, m, format);
    } catch (const ResourceLimit& e) {
        std::cerr << "truncated: " << e.what() << "\n";
        return kExitTruncated;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PoleError& e) {
        std::cerr << "usage error: " << e.what() << " (pick another z)\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
