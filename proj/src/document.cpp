#include "discrimina/document.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "discrimina/errors.hpp"

namespace discrimina {

using nlohmann::json;

Rational parse_rational_json(const json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return parse_rational(value.dump());
    throw ParseError("expected a rational string such as \"3/4\", got " + value.dump());
}

namespace {

PiecewisePoly parse_pieces(const json& pieces) {
    if (!pieces.is_array() || pieces.empty()) throw ParseError("\"pieces\" must be a non-empty array");
    std::vector<Rational> breakpoints;
    std::vector<Polynomial> polys;
    for (const auto& piece : pieces) {
        if (!piece.is_object() || !piece.contains("on") || !piece.contains("coeffs"))
            throw ParseError("each piece needs \"on\" and \"coeffs\"");
        const json& on = piece.at("on");
        if (!on.is_array() || on.size() != 2) throw ParseError("\"on\" must be [lo, hi]");
        const Rational lo = parse_rational_json(on[0]), hi = parse_rational_json(on[1]);
        if (breakpoints.empty())
            breakpoints.push_back(lo);
        else if (breakpoints.back() != lo)
            throw ParseError("pieces must be contiguous: a piece starts at " + to_string(lo) + " but the previous ends at " +
                             to_string(breakpoints.back()));
        breakpoints.push_back(hi);
        polys.push_back(parse_coefficients(piece.at("coeffs")));
    }
    try {
        return PiecewisePoly(std::move(breakpoints), std::move(polys));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

PiecewisePoly parse_max_affine(const json& spec) {
    if (!spec.is_array() || spec.size() != 2 || !spec[0].is_array() || !spec[1].is_array() || spec[0].size() != 2 ||
        spec[1].size() != 2)
        throw ParseError("\"maxAffine\" must be [[c0, c1], [d0, d1]]");
    return PiecewisePoly::max_affine(parse_rational_json(spec[0][0]), parse_rational_json(spec[0][1]),
                                     parse_rational_json(spec[1][0]), parse_rational_json(spec[1][1]));
}

json rational_array(std::span<const Rational> values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

}  // namespace

PiecewisePoly parse_factor(const json& factor) {
    if (!factor.is_object() || factor.size() != 1)
        throw ParseError("a kernel factor must be {\"pieces\": ...} or {\"maxAffine\": ...}");
    if (factor.contains("pieces")) return parse_pieces(factor.at("pieces"));
    if (factor.contains("maxAffine")) return parse_max_affine(factor.at("maxAffine"));
    throw ParseError("unknown kernel factor form: " + factor.begin().key());
}

Polynomial parse_coefficients(const json& array) {
    if (!array.is_array()) throw ParseError("coefficients must be a JSON array (ascending degree)");
    std::vector<Rational> c;
    c.reserve(array.size());
    for (const auto& v : array) c.push_back(parse_rational_json(v));
    return Polynomial(std::move(c));
}

Polynomial parse_coefficients_argument(std::string_view argument) {
    std::string text(argument);
    if (text.find('[') == std::string::npos) {
        std::ifstream in{std::filesystem::path(text)};
        if (!in) throw ParseError("cannot open coefficient file '" + text + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return parse_coefficients(json::parse(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed coefficient JSON: ") + e.what());
    }
}

double parse_tolerance(std::string_view text) {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value) || value <= 0)
        throw ParseError("tolerance must be a positive decimal, got '" + std::string(text) + "'");
    return value;
}

KernelDocument parse_kernel_document(const json& doc) {
    if (!doc.is_object()) throw ParseError("kernel document must be a JSON object");
    static const std::set<std::string> known{"n", "mode", "tol", "phi1", "phi2", "psi1", "psi2", "version", "description"};
    for (const auto& item : doc.items())
        if (!known.contains(item.key())) throw ParseError("unknown field \"" + item.key() + "\" in kernel document");
    for (const char* required : {"n", "phi1", "phi2", "psi1", "psi2"})
        if (!doc.contains(required)) throw ParseError(std::string("kernel document lacks \"") + required + "\"");
    if (doc.contains("version") && doc.at("version") != 1) throw ParseError("unsupported kernel document version");

    KernelDocument out;
    if (!doc.at("n").is_number_integer() || doc.at("n").get<long long>() < 1)
        throw ParseError("\"n\" must be a positive integer");
    out.n = doc.at("n").get<int>();
    out.phi1 = parse_factor(doc.at("phi1"));
    out.phi2 = parse_factor(doc.at("phi2"));
    out.psi1 = parse_factor(doc.at("psi1"));
    out.psi2 = parse_factor(doc.at("psi2"));
    if (doc.contains("mode")) {
        const json& mode = doc.at("mode");
        if (mode == "exact")
            out.mode = Mode::Exact;
        else if (mode == "numeric")
            out.mode = Mode::Numeric;
        else
            throw ParseError("\"mode\" must be \"exact\" or \"numeric\"");
    }
    if (doc.contains("tol")) {
        if (!doc.at("tol").is_string()) throw ParseError("\"tol\" must be a decimal string");
        out.tol = parse_tolerance(doc.at("tol").get<std::string>());
    }
    return out;
}

KernelDocument load_kernel_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open kernel document '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON in '") + path.string() + "': " + e.what());
    }
    return parse_kernel_document(doc);
}

json to_json(const KernelDocument& doc) {
    auto factor = [](const PiecewisePoly& f) {
        json pieces = json::array();
        for (std::size_t k = 0; k < f.piece_count(); ++k)
            pieces.push_back({{"on", {to_string(f.breakpoints()[k]), to_string(f.breakpoints()[k + 1])}},
                              {"coeffs", rational_array(f.pieces()[k].coeffs())}});
        return json{{"pieces", pieces}};
    };
    json out{{"version", 1},
             {"n", doc.n},
             {"mode", std::string(to_string(doc.mode))},
             {"phi1", factor(doc.phi1)},
             {"phi2", factor(doc.phi2)},
             {"psi1", factor(doc.psi1)},
             {"psi2", factor(doc.psi2)}};
    if (doc.tol) {
        std::ostringstream os;
        os.precision(17);
        os << *doc.tol;
        out["tol"] = os.str();
    }
    return out;
}

KernelSpec to_kernel_spec(const KernelDocument& doc) { return {doc.phi1, doc.phi2, doc.psi1, doc.psi2, doc.n}; }

NumericKernel to_numeric_kernel(const KernelDocument& doc) {
    auto wrap = [](PiecewisePoly f) { return [f = std::move(f)](double x) { return f.evaluate(x); }; };
    return {wrap(doc.phi1), wrap(doc.phi2), wrap(doc.psi1), wrap(doc.psi2), doc.n};
}

}  // namespace discrimina
