#include "hmf/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace hmf {

namespace {

json int_to_json(zz const & x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

zz int_from_json(json const & j)
{
    if (j.is_number_integer())
        return zz(j.get<long>());
    if (j.is_string())
        return zz(j.get<std::string>());
    throw hmf_error("ParseError", "expected an integer, got " + j.dump());
}

qq rational_from_json(json const & j)
{
    if (j.is_number_integer())
        return qq(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw hmf_error("ParseError", "expected a rational string, got " + j.dump());
}

json qvec_to_json(qvec const & v)
{
    json a = json::array();
    for (auto const & x : v)
        a.push_back(to_string(x));
    return a;
}

qvec qvec_from_json(json const & j)
{
    if (!j.is_array())
        throw hmf_error("ParseError", "expected an array of rationals");
    qvec v;
    for (auto const & x : j)
        v.push_back(rational_from_json(x));
    return v;
}

template <class Fn>
auto guarded(Fn && fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (json::exception const & e) {
        throw hmf_error("ParseError", e.what());
    } catch (std::invalid_argument const & e) {
        throw hmf_error("ParseError", e.what());
    }
}

} // namespace

json field_to_json(field_ptr const & F)
{
    json j;
    json poly = json::array();
    for (auto const & c : F->poly())
        poly.push_back(int_to_json(c));
    j["poly"] = poly;
    if (!F->has_power_basis()) {
        json B = json::array();
        for (auto const & row : F->basis())
            B.push_back(qvec_to_json(row));
        j["integral_basis"] = B;
    }
    return j;
}

field_ptr field_from_json(json const & j)
{
    return guarded([&] {
        if (!j.is_object() || !j.contains("poly"))
            throw hmf_error("ParseError", "field needs a \"poly\" entry");
        zvec poly;
        for (auto const & c : j.at("poly"))
            poly.push_back(int_from_json(c));
        std::optional<qmat> basis;
        if (j.contains("integral_basis") && !j.at("integral_basis").is_null()) {
            qmat B;
            for (auto const & row : j.at("integral_basis"))
                B.push_back(qvec_from_json(row));
            basis = B;
        }
        return number_field::make(poly, basis);
    });
}

json ideal_to_json(frac_ideal const & I)
{
    json rows = json::array();
    for (auto const & row : I.basis())
        rows.push_back(qvec_to_json(row));
    return rows;
}

frac_ideal ideal_from_json(field_ptr const & F, json const & j)
{
    return guarded([&] {
        qmat rows;
        for (auto const & row : j)
            rows.push_back(qvec_from_json(row));
        return frac_ideal(F, rows);
    });
}

json ring_to_json(coeff_ring const & R)
{
    json j;
    switch (R.kind) {
    case ring_kind::Q: j["kind"] = "Q"; break;
    case ring_kind::Qp: j["kind"] = "Qp"; break;
    case ring_kind::Fq: j["kind"] = "Fq"; break;
    case ring_kind::padic: j["kind"] = "padic"; break;
    }
    if (R.kind != ring_kind::Q)
        j["p"] = R.p;
    if (R.kind == ring_kind::Fq) {
        j["m"] = R.m;
        j["modulus"] = R.fq->modulus();
    }
    if (R.kind == ring_kind::padic)
        j["prec"] = R.prec;
    return j;
}

coeff_ring ring_from_json(json const & j)
{
    return guarded([&] {
        std::string k = j.at("kind").get<std::string>();
        if (k == "Q")
            return coeff_ring::rationals();
        long p = j.at("p").get<long>();
        if (!is_prime_small(p))
            throw hmf_error("ParseError", "ring characteristic must be prime");
        if (k == "Qp")
            return coeff_ring::rationals_at(p);
        if (k == "Fq") {
            coeff_ring R = coeff_ring::finite(p, j.value("m", 1));
            if (j.contains("modulus") && j.at("modulus").get<fp_poly>() != R.fq->modulus())
                throw hmf_error("ParseError", "only the default modulus of F_p^m is supported");
            return R;
        }
        if (k == "padic")
            return coeff_ring::padic(p, j.at("prec").get<int>());
        throw hmf_error("ParseError", "unknown ring kind " + k);
    });
}

namespace {

json scalar_to_json(coeff_ring const & R, scalar const & a)
{
    if (R.kind == ring_kind::Fq)
        return a.v;
    return to_string(a.q);
}

scalar scalar_from_json(coeff_ring const & R, json const & j)
{
    if (R.kind == ring_kind::Fq) {
        if (j.is_array())
            return s_normalize(R, {0, j.get<fp_poly>()});
        return s_from_rational(R, rational_from_json(j));
    }
    return s_from_rational(R, rational_from_json(j));
}

} // namespace

json weight_to_json(universal_weight const & w) { return {{"kind", "universal"}, {"exps", w.a}}; }

json weight_to_json(residue_weight const & w)
{
    json e = json::object();
    for (int P = 0; P < w.L.primes(); P++)
        for (int i = 1; i <= w.L.f[P]; i++)
            e[w.L.labels[P] + "," + std::to_string(i)] = w.at(P, i);
    return {{"kind", "residue"}, {"p", w.L.p}, {"exps", e}};
}

universal_weight universal_weight_from_json(json const & j)
{
    return guarded([&] {
        if (j.value("kind", "universal") != "universal")
            throw hmf_error("ParseError", "expected a universal weight");
        universal_weight w;
        w.a = j.at("exps").get<std::vector<int64_t>>();
        return w;
    });
}

residue_weight residue_weight_from_json(field_ptr const & F, json const & j)
{
    return guarded([&] {
        if (j.value("kind", "residue") != "residue")
            throw hmf_error("ParseError", "expected a residue weight");
        residue_weight w(weight_layout::of(F, j.at("p").get<long>()));
        for (auto const & [k, v] : j.at("exps").items()) {
            auto comma = k.find(',');
            if (comma == std::string::npos)
                throw hmf_error("ParseError", "residue weight keys look like \"P1,1\"");
            std::string label = k.substr(0, comma);
            long i = std::stol(k.substr(comma + 1));
            int P = -1;
            for (int q = 0; q < w.L.primes(); q++)
                if (w.L.labels[q] == label)
                    P = q;
            if (P < 0 || i < 1 || i > w.L.f[P])
                throw hmf_error("ParseError", "unknown residue pair " + k);
            w.at(P, i) = v.get<int64_t>();
        }
        return w;
    });
}

json qexp_to_json(qexpansion const & f)
{
    json j;
    j["field"] = field_to_json(f.field());
    j["cusp"] = {{"A", ideal_to_json(f.at().A)}, {"B", ideal_to_json(f.at().B)}, {"label", f.at().label}};
    j["ring"] = ring_to_json(f.ring());
    j["trace_bound"] = to_string(f.trace_bound());
    j["a0"] = scalar_to_json(f.ring(), f.a0());
    json cs = json::array();
    for (auto const & [k, t] : f.terms())
        cs.push_back({{"nu", qvec_to_json(t.nu)}, {"a", scalar_to_json(f.ring(), t.a)}});
    j["coeffs"] = cs;
    if (f.uweight)
        j["uweight"] = weight_to_json(*f.uweight);
    if (f.rweight)
        j["rweight"] = weight_to_json(*f.rweight);
    if (!f.meta.empty())
        j["meta"] = f.meta;
    return j;
}

qexpansion qexp_from_json(json const & j)
{
    return guarded([&] {
        field_ptr F = field_from_json(j.at("field"));
        json const & c = j.at("cusp");
        cusp C = cusp::make(ideal_from_json(F, c.at("A")), ideal_from_json(F, c.at("B")), c.value("label", "standard"));
        coeff_ring R = ring_from_json(j.at("ring"));
        qexpansion f(C, R, rational_from_json(j.at("trace_bound")));
        if (j.contains("a0"))
            f.set_a0(scalar_from_json(R, j.at("a0")));
        for (auto const & t : j.at("coeffs")) {
            elem nu = qvec_from_json(t.at("nu"));
            if ((int)nu.size() != F->degree())
                throw hmf_error("ParseError", "index has the wrong length");
            f.set(nu, scalar_from_json(R, t.at("a")));
        }
        if (j.contains("uweight")) {
            f.uweight = universal_weight_from_json(j.at("uweight"));
            if ((int)f.uweight->a.size() != F->degree())
                throw hmf_error("ParseError", "universal weight needs one exponent per embedding");
        }
        if (j.contains("rweight"))
            f.rweight = residue_weight_from_json(F, j.at("rweight"));
        if (j.contains("meta"))
            f.meta = j.at("meta").get<std::map<std::string, std::string>>();
        return f;
    });
}

json read_json_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw hmf_error("ParseError", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (json::exception const & e) {
        throw hmf_error("ParseError", path + ": " + e.what());
    }
}

void write_json_file(std::string const & path, json const & j)
{
    std::ofstream out(path);
    if (!out)
        throw hmf_error("IOError", "cannot write " + path);
    out << j.dump(1) << "\n";
}

std::string field_cache_key(field_ptr const & F)
{
    std::string k;
    for (auto const & c : F->poly())
        k += (k.empty() ? "" : "_") + c.get_str();
    if (!F->has_power_basis())
        k += "_b" + std::to_string(std::hash<std::string>{}(field_to_json(F).dump()));
    return k;
}

void load_zeta_cache(std::string const & dir, field_ptr const & F)
{
    auto path = std::filesystem::path(dir) / "zeta" / (field_cache_key(F) + ".json");
    if (!std::filesystem::exists(path))
        return;
    json j = read_json_file(path.string());
    guarded([&] {
        if (j.at("poly") != field_to_json(F).at("poly"))
            throw hmf_error("ParseError", "zeta cache belongs to another field");
        std::lock_guard<std::mutex> lk(F->cache_mu);
        for (auto const & [k, v] : j.at("values").items())
            F->zeta_memo[std::stol(k)] = rational_from_json(v);
        return 0;
    });
}

void save_zeta_cache(std::string const & dir, field_ptr const & F)
{
    auto sub = std::filesystem::path(dir) / "zeta";
    std::error_code ec;
    std::filesystem::create_directories(sub, ec);
    if (ec)
        throw hmf_error("IOError", "cannot create " + sub.string());
    json j;
    j["poly"] = field_to_json(F).at("poly");
    json vals = json::object();
    {
        std::lock_guard<std::mutex> lk(F->cache_mu);
        for (auto const & [k, v] : F->zeta_memo)
            vals[std::to_string(k)] = to_string(v);
    }
    j["values"] = vals;
    // write then rename so concurrent readers never see a partial file
    auto tmp = sub / (field_cache_key(F) + ".json.tmp");
    write_json_file(tmp.string(), j);
    std::filesystem::rename(tmp, sub / (field_cache_key(F) + ".json"), ec);
    if (ec)
        throw hmf_error("IOError", "cannot update the zeta cache");
}

} // namespace hmf
