#include "gspzeta/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gspzeta/errors.hpp"

namespace gspzeta::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing field");
    return *it;
}

const Json* optional_field(const Json& j, const char* key) {
    auto it = j.find(key);
    return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(path, "expected a rational string such as \"3/2\"");
    try {
        return QScalar::parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

// Re-raise domain validation errors with the location of the object that failed.
template <class F>
auto located(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

}  // namespace

Json to_json(const QScalar& x) { return Json{{"rat", x.rat_part().get_str()}, {"sqrt", x.sqrt_part().get_str()}}; }

QScalar qscalar_from_json(const Json& j, std::int64_t q, const std::string& path) {
    if (j.is_object()) {
        const Rational rat = rational_from_json(field(j, "rat", path), path + ".rat");
        const Json* s = optional_field(j, "sqrt");
        const Rational sqrt = s ? rational_from_json(*s, path + ".sqrt") : Rational(0);
        return located(path, [&] { return sgn(sqrt) == 0 ? QScalar(rat) : QScalar(rat, sqrt, q); });
    }
    return QScalar(rational_from_json(j, path));
}

Json to_json(const SeriesT& s) {
    Json arr = Json::array();
    for (const auto& c : s.coeffs()) arr.push_back(to_json(c));
    return arr;
}

Json to_json(const PolyT& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

Json to_json(const RatFnT& f) { return Json{{"numer", to_json(f.numer())}, {"denom", to_json(f.denom())}}; }

Json to_json(const SeriesComparison& c) {
    Json j{{"match", c.match}, {"compared_through", c.compared_through}};
    if (c.first_mismatch) {
        j["first_mismatch"] = *c.first_mismatch;
        j["lhs_coeff"] = to_json(c.lhs_coeff);
        j["rhs_coeff"] = to_json(c.rhs_coeff);
    }
    return j;
}

Json to_json(const Gl2Local& rep) {
    Json j{{"kind", std::string(to_string(rep.kind))}};
    if (rep.alpha) j["alpha"] = to_json(*rep.alpha);
    if (rep.beta) j["beta"] = to_json(*rep.beta);
    if (rep.omega) j["omega"] = to_json(*rep.omega);
    if (rep.kind == Gl2Kind::RamifiedOther) j["omega_tau"] = to_json(rep.omega_tau);
    if (rep.kind == Gl2Kind::RamifiedPSUnramAlpha || rep.kind == Gl2Kind::RamifiedOther) j["n"] = rep.conductor_exp;
    if (rep.kind == Gl2Kind::RamifiedPSUnramAlpha) j["beta_chi_unramified"] = rep.beta_chi_unramified;
    return j;
}

Gl2Local gl2_from_json(const Json& j, std::int64_t q, const std::string& path) {
    const Json& kind_j = field(j, "kind", path);
    if (!kind_j.is_string()) fail(path + ".kind", "expected a string");
    const Gl2Kind kind = located(path + ".kind", [&] { return parse_gl2_kind(kind_j.get<std::string>()); });
    auto scalar = [&](const char* key) { return qscalar_from_json(field(j, key, path), q, path + "." + key); };
    auto exponent = [&] { return static_cast<int>(as_int(field(j, "n", path), path + ".n")); };
    return located(path, [&] {
        switch (kind) {
            case Gl2Kind::UnramifiedPS: return Gl2Local::unramified_ps(q, scalar("alpha"), scalar("beta"));
            case Gl2Kind::RamifiedPSUnramAlpha: {
                bool flag = false;
                if (const Json* f = optional_field(j, "beta_chi_unramified")) {
                    if (!f->is_boolean()) fail(path + ".beta_chi_unramified", "expected a boolean");
                    flag = f->get<bool>();
                }
                return Gl2Local::ramified_ps(q, scalar("alpha"), scalar("beta"), exponent(), flag);
            }
            case Gl2Kind::SteinbergUnramified: return Gl2Local::steinberg(q, scalar("omega"));
            case Gl2Kind::RamifiedOther: return Gl2Local::ramified_other(q, scalar("omega_tau"), exponent());
        }
        fail(path + ".kind", "unhandled kind");
    });
}

Json to_json(const LocalInstance& inst) {
    Json satake = Json::array();
    for (const auto& g : inst.satake.gamma) satake.push_back(to_json(g));
    Json bessel{{"legendre", static_cast<int>(inst.bessel.legendre)}, {"lambda_varpi", to_json(inst.bessel.lambda_varpi)}};
    if (inst.bessel.lambda_varpi_L) bessel["lambda_varpi_L"] = to_json(*inst.bessel.lambda_varpi_L);
    if (inst.bessel.lambda_varpi_conj) bessel["lambda_varpi_conj"] = to_json(*inst.bessel.lambda_varpi_conj);
    return Json{{"q", inst.q()}, {"order", inst.order}, {"satake", satake}, {"bessel", bessel}, {"gl2", to_json(inst.rep)}};
}

LocalInstance instance_from_json(const Json& j, const std::string& path) {
    LocalInstance inst;
    const std::int64_t q = as_int(field(j, "q", path), path + ".q");
    if (q < 2) fail(path + ".q", "residue cardinality must be >= 2");
    inst.satake.q = q;
    if (const Json* o = optional_field(j, "order")) {
        inst.order = static_cast<int>(as_int(*o, path + ".order"));
        if (inst.order < 0) fail(path + ".order", "must be non-negative");
    }
    const Json& sat = field(j, "satake", path);
    if (!sat.is_array() || sat.size() != 4) fail(path + ".satake", "expected an array of 4 scalars");
    for (std::size_t i = 0; i < 4; ++i) {
        inst.satake.gamma[i] = qscalar_from_json(sat[i], q, path + ".satake[" + std::to_string(i) + "]");
    }

    const std::string bpath = path + ".bessel";
    const Json& b = field(j, "bessel", path);
    const std::int64_t leg = as_int(field(b, "legendre", bpath), bpath + ".legendre");
    if (leg < -1 || leg > 1) fail(bpath + ".legendre", "must be -1, 0 or 1");
    inst.bessel.legendre = static_cast<Legendre>(leg);
    inst.bessel.lambda_varpi = qscalar_from_json(field(b, "lambda_varpi", bpath), q, bpath + ".lambda_varpi");
    if (const Json* x = optional_field(b, "lambda_varpi_L")) {
        inst.bessel.lambda_varpi_L = qscalar_from_json(*x, q, bpath + ".lambda_varpi_L");
    }
    if (const Json* x = optional_field(b, "lambda_varpi_conj")) {
        inst.bessel.lambda_varpi_conj = qscalar_from_json(*x, q, bpath + ".lambda_varpi_conj");
    }
    inst.rep = gl2_from_json(field(j, "gl2", path), q, path + ".gl2");
    located(path, [&] {
        inst.validate();
        return 0;
    });
    return inst;
}

Json to_json(const VerificationReport& r) {
    Json j{{"case", std::string(to_string(r.instance.rep.kind))}, {"order", r.instance.order}, {"lhs", to_json(r.lhs)}};
    if (r.hq_series) j["hq"] = to_json(*r.hq_series);
    if (r.rhs_series) j["rhs"] = to_json(*r.rhs_series);
    if (r.lhs_vs_hq) j["lhs_vs_hq"] = to_json(*r.lhs_vs_hq);
    if (r.lhs_vs_rhs) j["lhs_vs_rhs"] = to_json(*r.lhs_vs_rhs);
    j["pass"] = r.pass;
    return j;
}

Json to_json(const cosets::CosetPartitionReport& r) {
    Json reps = Json::array();
    for (const auto& m : r.representatives) reps.push_back(m.to_string());
    Json j{{"p", r.p},
           {"method", r.method == cosets::PartitionMethod::Full ? "full" : "quotient"},
           {"classes", r.class_count},
           {"sizes", r.class_sizes},
           {"reps", reps},
           {"identity_t1_distinct", r.identity_t1_distinct},
           {"identity_class_contains_subgroups", r.identity_class_contains_subgroups},
           {"closure_verified", r.closure_verified}};
    if (r.method == cosets::PartitionMethod::Quotient) j["quotient_size"] = r.quotient_size;
    return j;
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j, const std::string& path) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_string()) return {rational_from_json(j, path).get_d(), 0.0};
    if (j.is_object()) {
        auto part = [&](const char* key) -> double {
            const Json* x = optional_field(j, key);
            if (!x) return 0.0;
            if (x->is_number()) return x->get<double>();
            return rational_from_json(*x, path + "." + key).get_d();
        };
        if (!optional_field(j, "re") && !optional_field(j, "im")) fail(path, "expected fields re/im");
        return {part("re"), part("im")};
    }
    fail(path, "expected a number, rational string or {re, im}");
}

Json to_json(const ArchSpec& spec) {
    return Json{{"l", spec.l},         {"l1", spec.l1},           {"l2", spec.l2},
                {"D", spec.D},         {"q_exp", to_json(spec.q_exp)}, {"ir", to_json(spec.ir)},
                {"a_plus", to_json(spec.a_plus)}, {"s", to_json(spec.s)}};
}

ArchSpec arch_spec_from_json(const Json& j, const std::string& path) {
    const int l = static_cast<int>(as_int(field(j, "l", path), path + ".l"));
    const int l1 = static_cast<int>(as_int(field(j, "l1", path), path + ".l1"));
    const int D = static_cast<int>(as_int(field(j, "D", path), path + ".D"));
    const Complex s = complex_from_json(field(j, "s", path), path + ".s");
    const Json* q = optional_field(j, "q_exp");
    const Json* ir = optional_field(j, "ir");
    const Json* a = optional_field(j, "a_plus");
    if (const Json* l2 = optional_field(j, "l2")) {
        if (as_int(*l2, path + ".l2") != derived_l2(l, l1)) fail(path + ".l2", "inconsistent with l and l1");
    }
    return located(path, [&] {
        const ArchSpec ds = ArchSpec::discrete_series(l, l1, D, s);
        return ArchSpec::make(l, l1, D, q ? complex_from_json(*q, path + ".q_exp") : Complex{0.0, 0.0},
                              ir ? complex_from_json(*ir, path + ".ir") : ds.ir,
                              a ? complex_from_json(*a, path + ".a_plus") : ds.a_plus, s);
    });
}

GlobalSpec global_spec_from_json(const Json& j, const std::string& path) {
    const int l = static_cast<int>(as_int(field(j, "l", path), path + ".l"));
    const int D = static_cast<int>(as_int(field(j, "D", path), path + ".D"));
    Complex a{1.0, 0.0};
    const Json* classes = optional_field(j, "classes");
    const Json* a_j = optional_field(j, "a_lambda");
    if (classes && a_j) fail(path, "give either a_lambda or classes, not both");
    if (a_j) a = complex_from_json(*a_j, path + ".a_lambda");
    if (classes) {
        if (!classes->is_array()) fail(path + ".classes", "expected an array");
        std::vector<ClassDatum> data;
        for (std::size_t i = 0; i < classes->size(); ++i) {
            const std::string cp = path + ".classes[" + std::to_string(i) + "]";
            data.push_back({complex_from_json(field((*classes)[i], "lambda_t", cp), cp + ".lambda_t"),
                            complex_from_json(field((*classes)[i], "fourier", cp), cp + ".fourier")});
        }
        a = located(path + ".classes", [&] { return a_lambda(data); });
    }
    std::vector<BadPrime> bad;
    if (const Json* bp = optional_field(j, "bad_primes")) {
        if (!bp->is_array()) fail(path + ".bad_primes", "expected an array");
        for (std::size_t i = 0; i < bp->size(); ++i) {
            const std::string cp = path + ".bad_primes[" + std::to_string(i) + "]";
            const Json& e = (*bp)[i];
            BadPrime b;
            b.p = as_int(field(e, "p", cp), cp + ".p");
            if (const Json* y = optional_field(e, "y")) b.y_value = complex_from_json(*y, cp + ".y");
            if (const Json* y = optional_field(e, "y_exact")) {
                const std::int64_t q = optional_field(e, "q") ? as_int(e["q"], cp + ".q") : 0;
                b.y_exact = qscalar_from_json(*y, q, cp + ".y_exact");
            }
            if (const Json* inst = optional_field(e, "instance")) {
                const LocalInstance li = instance_from_json(*inst, cp + ".instance");
                b.y_exact = located(cp + ".instance", [&] { return local_y_at_special_point(li, l); });
            }
            bad.push_back(std::move(b));
        }
    }
    return located(path, [&] { return GlobalSpec::make(l, D, a, std::move(bad)); });
}

Json to_json(const SpecialValueConstant& c) {
    return Json{{"mantissa", c.mantissa_text()},
                {"sqrt_factor", c.sqrt_factor},
                {"bad_prime_product", to_json(c.bad_prime_product)},
                {"value", to_json(c.value)}};
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        std::ostringstream os;
        os << path << ": malformed JSON at byte " << e.byte << " (" << e.what() << ")";
        throw ParseError(os.str());
    }
}

}  // namespace gspzeta::io
