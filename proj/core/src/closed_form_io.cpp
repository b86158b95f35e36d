#include "matpow/closed_form_io.hpp"

#include <json.hpp>

#include "matpow/numfmt.hpp"
#include "matpow/version.hpp"

namespace matpow {

namespace {

// Hand-rolled writer: nlohmann's number output does not honor a fixed
// significant-digit policy, and the document key order must be stable.
void append_complex(std::string& out, const Complex& z) {
    out += "{\"re\":" + format_double(z.real(), 17) + ",\"im\":" + format_double(z.imag(), 17) +
           "}";
}

Complex read_complex(const nlohmann::json& j) {
    return Complex{j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace

std::string serialize_closed_form(const ClosedForm& cf) {
    std::string out;
    out += "{\n";
    out += "  \"schema_version\": 1,\n";
    out += "  \"metadata\": {\n";
    out += "    \"tool\": \"" + std::string(kToolName) + "\",\n";
    out += "    \"version\": \"" + std::string(kToolVersion) + "\",\n";
    out += "    \"tolerances\": {\"cluster_absolute\": " + format_double(cf.tolerances.absolute, 17) +
           ", \"cluster_relative\": " + format_double(cf.tolerances.relative, 17) + "}\n";
    out += "  },\n";
    out += "  \"dim\": " + std::to_string(cf.dim) + ",\n";
    out += "  \"source_is_real\": " + std::string(cf.source_is_real ? "true" : "false") + ",\n";
    out += "  \"residual\": " + format_double(cf.residual, 17) + ",\n";
    out += "  \"condition_estimate\": " + format_double(cf.condition_estimate, 17) + ",\n";
    out += "  \"groups\": [\n";
    for (std::size_t g = 0; g < cf.spectrum.groups.size(); ++g) {
        const EigenvalueGroup& grp = cf.spectrum.groups[g];
        out += "    {\n";
        out += "      \"lambda\": ";
        append_complex(out, grp.lambda);
        out += ",\n";
        out += "      \"multiplicity\": " + std::to_string(grp.multiplicity) + ",\n";
        out += "      \"coefficients\": [";
        for (int k = 0; k < grp.multiplicity; ++k) {
            const Matrix& ck = cf.coefficients[g][static_cast<std::size_t>(k)];
            if (k > 0) out += ",";
            out += "\n        [";
            for (int i = 0; i < cf.dim; ++i) {
                if (i > 0) out += ",";
                out += "\n          [";
                for (int j = 0; j < cf.dim; ++j) {
                    if (j > 0) out += ",";
                    append_complex(out, ck(i, j));
                }
                out += "]";
            }
            out += "\n        ]";
        }
        out += "\n      ]\n";
        out += (g + 1 < cf.spectrum.groups.size()) ? "    },\n" : "    }\n";
    }
    out += "  ]\n";
    out += "}\n";
    return out;
}

ClosedForm deserialize_closed_form(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    try {
        if (!j.is_object() || !j.contains("schema_version")) {
            throw ParseError("closed-form document lacks \"schema_version\"", 1, 1);
        }
        if (j.at("schema_version").get<int>() != 1) {
            throw ParseError("unsupported schema_version " + j.at("schema_version").dump(), 1, 1);
        }

        ClosedForm cf;
        cf.dim = j.at("dim").get<int>();
        if (cf.dim < 1) throw ParseError("dim must be >= 1", 1, 1);
        cf.source_is_real = j.at("source_is_real").get<bool>();
        cf.residual = j.at("residual").get<double>();
        cf.condition_estimate = j.at("condition_estimate").get<double>();
        if (j.contains("metadata") && j.at("metadata").contains("tolerances")) {
            const auto& t = j.at("metadata").at("tolerances");
            cf.tolerances.absolute = t.at("cluster_absolute").get<double>();
            cf.tolerances.relative = t.at("cluster_relative").get<double>();
        }

        std::vector<EigenvalueGroup> groups;
        std::vector<std::vector<Matrix>> coefficients;
        for (const auto& gj : j.at("groups")) {
            EigenvalueGroup g;
            g.lambda = read_complex(gj.at("lambda"));
            g.multiplicity = gj.at("multiplicity").get<int>();
            const auto& stacks = gj.at("coefficients");
            if (static_cast<int>(stacks.size()) != g.multiplicity) {
                throw ParseError("coefficient stack count does not match multiplicity", 1, 1);
            }
            std::vector<Matrix> ck;
            for (const auto& mk : stacks) {
                std::vector<Complex> entries;
                entries.reserve(static_cast<std::size_t>(cf.dim) * cf.dim);
                if (static_cast<int>(mk.size()) != cf.dim) {
                    throw ParseError("coefficient matrix has wrong row count", 1, 1);
                }
                for (const auto& row : mk) {
                    if (static_cast<int>(row.size()) != cf.dim) {
                        throw ParseError("coefficient matrix has wrong column count", 1, 1);
                    }
                    for (const auto& cell : row) entries.push_back(read_complex(cell));
                }
                ck.emplace_back(cf.dim, std::move(entries));
            }
            groups.push_back(std::move(g));
            coefficients.push_back(std::move(ck));
        }
        cf.spectrum = make_spectrum(std::move(groups), cf.dim);
        cf.coefficients = std::move(coefficients);
        return cf;
    } catch (const ParseError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed closed-form document: ") + e.what(), 1, 1);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("malformed closed-form document: ") + e.what(), 1, 1);
    }
}

}  // namespace matpow
