#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "acceptance_suite.hpp"
#include "hmf/congruences.hpp"
#include "hmf/eisenstein.hpp"
#include "hmf/functorial.hpp"
#include "hmf/json_io.hpp"
#include "hmf/theta.hpp"
#include "hmf/weights.hpp"
#include "hmf/zeta.hpp"

using namespace hmf;

namespace {

std::optional<std::string> cache_dir()
{
    char const * d = std::getenv("HMF_CACHE_DIR");
    if (!d || !*d)
        return std::nullopt;
    return std::string(d);
}

field_ptr load_field(std::string const & path)
{
    field_ptr F = field_from_json(read_json_file(path));
    if (auto d = cache_dir())
        load_zeta_cache(*d, F);
    return F;
}

void store_cache(field_ptr const & F)
{
    if (auto d = cache_dir())
        save_zeta_cache(*d, F);
}

void emit(json const & j, std::string const & out)
{
    if (out.empty())
        std::cout << j.dump(1) << "\n";
    else
        write_json_file(out, j);
}

std::string factored(factorization const & f)
{
    std::string s;
    for (auto const & [q, e] : f.factors) {
        if (!s.empty())
            s += " * ";
        s += q.get_str() + (e > 1 ? "^" + std::to_string(e) : "");
    }
    if (f.unfactored != 1)
        s += (s.empty() ? "" : " * ") + f.unfactored.get_str();
    return s.empty() ? "1" : s;
}

long ring_prime(qexpansion const & f, long p)
{
    if (p > 0)
        return p;
    if (f.ring().tracks_prime())
        return f.ring().p;
    throw hmf_error("MissingPrime", "expansion over Q: pass --p");
}

int prime_by_label(field_ptr const & F, long p, std::string const & label)
{
    auto const & ps = F->primes_above(p);
    for (auto const & P : ps)
        if (P.label == label)
            return P.index;
    throw hmf_error("BadPrime", "no prime " + label + " above " + std::to_string(p));
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Hilbert modular forms: q-expansions, operators, zeta values and congruences"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine readable output and errors");

    std::string field_path, in_path, out_path;
    long k = 0, kprime = 0, p = 0;
    std::string T = "10";

    auto * zeta = app.add_subcommand("zeta", "zeta_L(1-k) with its denominator");
    zeta->add_option("--field", field_path)->required();
    zeta->add_option("--k", k)->required();
    zeta->add_option("--p", p, "also print the p-adic valuation and the value with the Euler factor at p removed");

    auto * eis = app.add_subcommand("eis", "Eisenstein series q-expansion at the standard cusp");
    long dagger = 0, pstar = 0;
    int prec = 0;
    eis->add_option("--field", field_path)->required();
    eis->add_option("--k", k)->required();
    eis->add_option("--trace-bound", T);
    eis->add_option("--dagger", dagger, "remove the Euler factors at p");
    eis->add_option("--pstar", pstar, "p-adic E* mod p^prec");
    eis->add_option("--prec", prec);
    eis->add_option("--out", out_path);

    std::string label;
    long i = 1;
    int j = 0;
    auto * th = app.add_subcommand("theta", "Theta_{P,i}^[j]");
    th->add_option("--in", in_path)->required();
    th->add_option("--prime-label", label)->required();
    th->add_option("--i", i);
    th->add_option("--j", j);
    th->add_option("--out", out_path);

    auto * uop = app.add_subcommand("uop", "U operator");
    auto * vop = app.add_subcommand("vop", "V operator");
    auto * lam = app.add_subcommand("lambda", "Lambda = V U");
    for (auto * s : {uop, vop, lam}) {
        s->add_option("--in", in_path)->required();
        s->add_option("--p", p, "defaults to the characteristic of the coefficient ring");
        s->add_option("--out", out_path);
    }

    std::string target;
    auto * pb = app.add_subcommand("pullback", "restriction to a subfield along traces");
    pb->add_option("--in", in_path)->required();
    pb->add_option("--target-field", target)->required();
    pb->add_option("--out", out_path);

    auto * cong = app.add_subcommand("congruence", "predicted and actual valuation of the E-dagger constant term difference");
    cong->add_option("--field", field_path)->required();
    cong->add_option("--p", p)->required();
    cong->add_option("--k", k)->required();
    cong->add_option("--kprime", kprime)->required();

    auto * integ = app.add_subcommand("integrality", "denominator of zeta_L(1-k) against the predicted bound");
    integ->add_option("--field", field_path)->required();
    integ->add_option("--p", p)->required();
    integ->add_option("--k", k)->required();

    std::string weight_path, op = "";
    auto * wts = app.add_subcommand("weights", "weight lattice data at p, or a filtration bound");
    wts->add_option("--field", field_path)->required();
    wts->add_option("--p", p)->required();
    wts->add_option("--weight", weight_path, "residue weight JSON");
    wts->add_option("--op", op, "theta, V, U or hasse")->check(CLI::IsMember({"theta", "V", "U", "hasse"}));
    wts->add_option("--prime-label", label);
    wts->add_option("--i", i);

    std::vector<int> criteria;
    auto * self = app.add_subcommand("selftest", "run the acceptance suite");
    self->add_option("--criterion", criteria, "only these criteria");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*zeta) {
            field_ptr F = load_field(field_path);
            auto z = zeta_special_value(F, k);
            store_cache(F);
            if (as_json) {
                json j;
                j["k"] = k;
                j["value"] = to_string(z.value);
                j["denominator"] = factored(z.den);
                json v = json::object();
                for (auto const & [q, e] : z.den.factors)
                    v[q.get_str()] = -e;
                if (p > 0) {
                    v[std::to_string(p)] = val_p(z.value, p);
                    j["euler_removed"] = to_string(p_adic_zeta(F, p, k));
                }
                j["valuations"] = v;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << to_string(z.value) << "\n";
                std::cout << "denominator: " << factored(z.den) << "\n";
                for (auto const & [q, e] : z.den.factors)
                    std::cout << "val_" << q.get_str() << ": " << -e << "\n";
                if (p > 0) {
                    int v = val_p(z.value, p);
                    if (v >= 0 || v == val_infinity)
                        std::cout << "val_" << p << ": " << (v == val_infinity ? std::string("inf") : std::to_string(v)) << "\n";
                    std::cout << "euler factor at " << p << " removed: " << to_string(p_adic_zeta(F, p, k)) << "\n";
                }
            }
        } else if (*eis) {
            field_ptr F = load_field(field_path);
            cusp C = cusp::standard(F);
            qq bound = parse_rational(T);
            qexpansion f;
            if (pstar > 0) {
                if (prec < 1)
                    throw hmf_error("BadPrecision", "--pstar needs --prec n >= 1");
                f = eisenstein_pstar(F, pstar, padic_weight::integer(pstar, k), C, bound, prec);
            } else if (dagger > 0) {
                f = eisenstein_dagger(F, k, dagger, C, bound);
            } else {
                f = eisenstein_qexp(F, k, C, bound);
            }
            store_cache(F);
            emit(qexp_to_json(f), out_path);
        } else if (*th) {
            qexpansion f = qexp_from_json(read_json_file(in_path));
            long q = ring_prime(f, 0);
            int P = prime_by_label(f.field(), q, label);
            qexpansion h;
            if (f.ring().kind == ring_kind::padic)
                h = padic_theta(f, q, P, i, j);
            else {
                residue_character_table X(f.field(), q, f.at().M);
                h = theta(X, f, P, i, j);
            }
            emit(qexp_to_json(h), out_path);
        } else if (*uop || *vop || *lam) {
            qexpansion f = qexp_from_json(read_json_file(in_path));
            long q = ring_prime(f, p);
            qexpansion h;
            if (*uop)
                h = u_operator(f, q);
            else if (*vop)
                h = v_operator(f, q);
            else if (f.ring().kind == ring_kind::Fq)
                h = lambda(residue_character_table(f.field(), q, f.at().M), f);
            else
                h = lambda_filter(f, q);
            emit(qexp_to_json(h), out_path);
        } else if (*pb) {
            if (target != "Q")
                throw hmf_error("Unsupported", "only --target-field Q is supported");
            qexpansion f = qexp_from_json(read_json_file(in_path));
            auto R = relative_embedding::over_Q(f.field());
            emit(qexp_to_json(pullback_qexp(R, f, cusp::trivial(rational_field()))), out_path);
        } else if (*cong) {
            field_ptr F = load_field(field_path);
            auto r = verify_congruence(F, p, k, kprime);
            store_cache(F);
            if (as_json) {
                json j;
                j["predicted_min"] = r.predicted ? json(*r.predicted) : json(nullptr);
                j["actual"] = r.actual == val_infinity ? json("inf") : json(r.actual);
                j["pass"] = r.pass;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "predicted_min: " << (r.predicted ? std::to_string(*r.predicted) : std::string("none")) << "\n";
                std::cout << "actual: " << (r.actual == val_infinity ? std::string("inf") : std::to_string(r.actual)) << "\n";
                if (!r.detail.empty())
                    std::cout << "detail: " << r.detail << "\n";
                std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
            }
        } else if (*integ) {
            field_ptr F = load_field(field_path);
            auto r = check_integrality(F, p, k);
            store_cache(F);
            if (as_json) {
                json j;
                j["n"] = r.n;
                j["modulus"] = r.modulus.get_str();
                j["pass"] = r.pass;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "2^-g zeta_L(1-k) = " << to_string(r.a0) << "\n";
                std::cout << r.detail << "\n" << (r.pass ? "PASS" : "FAIL") << "\n";
            }
        } else if (*wts) {
            field_ptr F = load_field(field_path);
            weight_layout L = weight_layout::of(F, p);
            json j;
            if (!weight_path.empty()) {
                if (op.empty())
                    throw hmf_error("MissingOp", "--weight needs --op");
                residue_weight w = residue_weight_from_json(F, read_json_file(weight_path));
                weight_op o{weight_op_kind::V, 0, i};
                if (op == "theta" || op == "hasse") {
                    o.kind = op == "theta" ? weight_op_kind::Theta : weight_op_kind::MulHasse;
                    o.P = prime_by_label(F, p, label);
                } else if (op == "U")
                    o.kind = weight_op_kind::U;
                auto b = filtration_bound(o, w);
                j["bound"] = weight_to_json(b.bound);
                json rb = json::array();
                for (auto const & x : b.rational_bound)
                    rb.push_back(to_string(x));
                j["rational_bound"] = rb;
                j["exact"] = b.exact;
                j["strict"] = b.strict;
                j["rule"] = b.rule;
            } else {
                json primes = json::array();
                for (int P = 0; P < L.primes(); P++)
                    primes.push_back({{"label", L.labels[P]}, {"e", L.e[P]}, {"f", L.f[P]}});
                j["p"] = p;
                j["primes"] = primes;
                json ps = json::array();
                for (int P = 0; P < L.primes(); P++)
                    for (long r = 1; r <= L.f[P]; r++)
                        ps.push_back(weight_to_json(psi(L, P, r)));
                j["hasse_weights"] = ps;
                j["hasse_lattice_index"] = hasse_lattice_index(L).get_str();
                auto box = ordinary_box(L);
                j["ordinary_box"] = {box.t, box.hi};
                if (box.ramified_variant)
                    j["ordinary_box_totally_ramified"] = {box.ramified_variant->first, box.ramified_variant->second};
            }
            std::cout << j.dump(1) << "\n";
        } else if (*self) {
            std::vector<acceptance::criterion_result> rs;
            if (criteria.empty())
                rs = acceptance::run_all(std::cout);
            for (int c : criteria) {
                rs.push_back(acceptance::run_criterion(c));
                std::cout << acceptance::format_line(rs.back()) << std::endl;
            }
            for (auto const & r : rs)
                if (!r.pass)
                    return 1;
        }
    } catch (hmf_error const & e) {
        if (as_json)
            std::cout << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (std::exception const & e) {
        if (as_json)
            std::cout << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
