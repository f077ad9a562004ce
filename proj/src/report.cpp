#include "discrimina/report.hpp"

#include <sstream>

#include "discrimina/errors.hpp"

#ifndef DISCRIMINA_VERSION
#define DISCRIMINA_VERSION "dev"
#endif

namespace discrimina {

using nlohmann::json;

std::string_view tool_version() { return DISCRIMINA_VERSION; }

namespace {

json rationals(std::span<const Rational> values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

json signs(const SignList& s) { return json(std::vector<int>(s.entries().begin(), s.entries().end())); }

json polynomial_json(const Polynomial& p) {
    return {{"coeffs", rationals(p.coeffs())}, {"degree", p.degree()}, {"text", to_string(p)}};
}

json header(std::string_view schema, Mode mode) {
    return {{"tool", "discrimina"},
            {"version", std::string(tool_version())},
            {"schema", std::string(schema)},
            {"mode", std::string(to_string(mode))}};
}

std::string join(const std::vector<int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + "]";
}

}  // namespace

json to_json(const RootCountReport& r) {
    return {{"mu", r.mu},
            {"nu", r.nu},
            {"count", r.count},
            {"sign_list", signs(r.sign_list)},
            {"revised_sign_list", signs(r.revised)},
            {"halved", r.halved},
            {"leading_zero", r.leading_zero}};
}

json to_json(const AnalysisReport& r) {
    json out = header("discrimina-report/1", r.mode);
    out["n"] = r.n;
    out["classification"] = std::string(to_string(r.classification));
    out["m"] = r.m ? json(*r.m) : json(nullptr);
    out["certified"] = r.certified;
    out["moments"] = {{"a", rationals(r.moments.a)}, {"b", rationals(r.moments.b)}};
    if (r.mode == Mode::Numeric)
        out["moment_errors"] = {{"a", rationals(r.a_error)}, {"b", rationals(r.b_error)}};
    out["alpha"] = rationals(r.alpha.alpha);
    out["reduced_polynomial"] = polynomial_json(r.alpha.reduced_polynomial());

    if (r.linear) {
        json lin{{"a10_minus_1", to_string(r.linear->a10_minus_1)}, {"determinant", to_string(r.linear->determinant)}};
        if (r.linear->direction)
            lin["direction"] = rationals(*r.linear->direction);
        else
            lin["direction"] = nullptr;
        out["linear"] = lin;
    }
    if (r.counts) {
        out["discrimination"] = {{"even_polynomial", to_json(r.counts->even_path)},
                                 {"reduced_polynomial", to_json(r.counts->reduced_path)}};
    }
    if (r.cubic) {
        const auto& c = r.cubic->invariants;
        out["cubic"] = {{"p", to_string(c.p)},
                        {"r", to_string(c.r)},
                        {"t", to_string(c.t)},
                        {"delta1", to_string(c.delta1)},
                        {"delta2", to_string(c.delta2)},
                        {"delta3", to_string(c.delta3)},
                        {"d_list", rationals(c.d_list)},
                        {"conditions", {{"three", r.cubic->three}, {"two", r.cubic->two}, {"one", r.cubic->one}}},
                        {"m", r.cubic->m}};
    }
    out["negative_solutions"] = {{"infinite", r.negative.infinite}, {"count", r.negative.count}};

    json sols = json::array();
    for (const auto& s : r.solutions) {
        sols.push_back({{"lambda1", to_string(s.lambda1)},
                        {"lambda2", to_string(s.lambda2)},
                        {"lambda1_decimal", s.lambda1.get_d()},
                        {"lambda2_decimal", s.lambda2.get_d()},
                        {"lambda1_width", to_string(s.lambda1_width)},
                        {"lambda2_width", to_string(s.lambda2_width)},
                        {"root", {{"lo", to_string(s.root.lo)}, {"hi", to_string(s.root.hi)}}},
                        {"residual", s.residual.get_d()},
                        {"residual_exact_zero", s.residual == 0}});
    }
    out["solutions"] = sols;
    out["notes"] = r.notes;
    return out;
}

json real_count_report(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("the zero polynomial has no finite root count");
    if (f.degree() < 1) throw DomainError("a constant polynomial has no roots to count");
    json out = header("discrimina-count/1", Mode::Exact);
    out["command"] = "count-real";
    out["polynomial"] = polynomial_json(f);
    const auto seq = discriminant_sequence(f);
    out["discriminant_sequence"] = rationals(seq.values);
    const auto report = count_distinct_real_roots(f);
    out["result"] = to_json(report);
    out["count"] = report.count;
    return out;
}

json positive_count_report(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("the zero polynomial has no finite root count");
    if (f.degree() < 1) throw DomainError("a constant polynomial has no roots to count");
    json out = header("discrimina-count/1", Mode::Exact);
    out["command"] = "count-positive";
    out["polynomial"] = polynomial_json(f);
    const std::size_t zeros = zero_root_multiplicity(f);
    const Polynomial stripped = strip_zero_roots(f);
    out["zero_root_multiplicity"] = zeros;
    out["stripped_polynomial"] = polynomial_json(stripped);
    if (stripped.degree() < 1) {
        out["result"] = nullptr;
        out["count"] = 0;
        return out;
    }
    const auto report = count_distinct_positive_roots(stripped);
    out["result"] = to_json(report);
    out["count"] = report.count;
    return out;
}

std::string summary(const AnalysisReport& r) {
    std::ostringstream os;
    os << "n = " << r.n << " (" << to_string(r.mode) << " mode)\n";
    os << "alpha = [";
    for (std::size_t i = 0; i < r.alpha.alpha.size(); ++i) os << (i ? ", " : "") << to_string(r.alpha.alpha[i]);
    os << "]\n";
    os << "classification: " << to_string(r.classification);
    if (r.m) os << ", m = " << *r.m;
    os << (r.certified ? " (certified)" : " (UNCERTIFIED)") << "\n";
    if (r.linear && r.linear->direction)
        os << "ray: c * (" << to_string((*r.linear->direction)[0]) << " phi1 + " << to_string((*r.linear->direction)[1])
           << " phi2), c > 0\n";
    if (r.counts) {
        const auto& e = r.counts->even_path;
        os << "revised sign list " << join(std::vector<int>(e.revised.entries().begin(), e.revised.entries().end())) << ", mu = " << e.mu
           << ", nu = " << e.nu << "\n";
    }
    if (r.cubic) {
        const auto& c = r.cubic->invariants;
        os << "p = " << to_string(c.p) << ", Delta1 = " << to_string(c.delta1) << ", Delta2 = " << to_string(c.delta2)
           << ", Delta3 = " << to_string(c.delta3) << "\n";
    }
    os << "negative solutions: " << (r.negative.infinite ? std::string("infinitely many") : std::to_string(r.negative.count))
       << "\n";
    for (std::size_t i = 0; i < r.solutions.size(); ++i) {
        const auto& s = r.solutions[i];
        os << "solution " << i + 1 << ": lambda1 = " << to_decimal(s.lambda1, 12) << ", lambda2 = " << to_decimal(s.lambda2, 12)
           << ", residual = " << to_decimal(s.residual, 3) << "\n";
    }
    for (const auto& note : r.notes) os << "note: " << note << "\n";
    return os.str();
}

std::string count_summary(const json& report) {
    std::ostringstream os;
    os << report.at("command").get<std::string>() << ": " << report.at("polynomial").at("text").get<std::string>() << "\n";
    if (report.contains("zero_root_multiplicity") && report.at("zero_root_multiplicity").get<int>() > 0)
        os << "zero root multiplicity: " << report.at("zero_root_multiplicity").get<int>() << "\n";
    if (!report.at("result").is_null()) {
        const auto& r = report.at("result");
        os << "revised sign list " << r.at("revised_sign_list").dump() << ", mu = " << r.at("mu") << ", nu = " << r.at("nu")
           << "\n";
    }
    os << "count: " << report.at("count") << "\n";
    return os.str();
}

}  // namespace discrimina
