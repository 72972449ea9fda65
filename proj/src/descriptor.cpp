#include "lfzero/descriptor.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lfzero/errors.hpp"

namespace lfzero {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& origin, long line_no,
                    const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParseError(origin, line_no, "malformed number '" + text + "'");
    }
    if (used != text.size()) {
        throw ParseError(origin, line_no, "trailing junk in '" + text + "'");
    }
    return value;
}

long parse_integer(const std::string& origin, long line_no,
                   const std::string& text) {
    const double value = parse_double(origin, line_no, text);
    const long rounded = std::lround(value);
    if (rounded != value) {
        throw ParseError(origin, line_no, "'" + text + "' is not an integer");
    }
    return rounded;
}

}  // namespace

void validate(const SelbergDescriptor& desc) {
    if (!(desc.q_scale > 0.0)) {
        throw DomainError("descriptor '" + desc.name + "': Q must be positive");
    }
    if (std::abs(std::abs(desc.root_number) - 1.0) > 1e-12) {
        throw DomainError("descriptor '" + desc.name +
                          "': root number must have unit modulus");
    }
    if (desc.pole_order < 0) {
        throw DomainError("descriptor '" + desc.name +
                          "': pole order must be nonnegative");
    }
    if (desc.gamma_factors.empty()) {
        throw DomainError("descriptor '" + desc.name +
                          "': at least one gamma factor required");
    }
    for (const auto& g : desc.gamma_factors) {
        if (!(g.lambda > 0.0)) {
            throw DomainError("descriptor '" + desc.name +
                              "': gamma factor lambda must be positive");
        }
        if (g.mu.real() < 0.0) {
            throw DomainError("descriptor '" + desc.name +
                              "': gamma factor needs Re(mu) >= 0");
        }
    }
}

double degree(const SelbergDescriptor& desc) {
    double sum = 0.0;
    for (const auto& g : desc.gamma_factors) sum += g.lambda;
    return 2.0 * sum;
}

double log_conductor(const SelbergDescriptor& desc) {
    double acc = degree(desc) * std::log(kTwoPi) + 2.0 * std::log(desc.q_scale);
    for (const auto& g : desc.gamma_factors) {
        acc += 2.0 * g.lambda * std::log(g.lambda);
    }
    return acc;
}

double conductor(const SelbergDescriptor& desc) {
    return std::exp(log_conductor(desc));
}

CountingConstants counting_constants(const SelbergDescriptor& desc) {
    const double d = degree(desc);
    CountingConstants c;
    c.degree = d;
    c.conductor = conductor(desc);
    c.c1 = (log_conductor(desc) - d * (std::log(kTwoPi) + 1.0)) / kTwoPi;
    return c;
}

double counting_main_term(const SelbergDescriptor& desc, double T) {
    if (!(T > 0.0)) {
        throw DomainError("counting_main_term requires T > 0");
    }
    const CountingConstants c = counting_constants(desc);
    return (c.degree / kTwoPi) * T * std::log(T) + c.c1 * T;
}

SelbergDescriptor parse_descriptor_text(const std::string& text,
                                        const std::string& origin,
                                        const std::filesystem::path& base_dir) {
    SelbergDescriptor desc;
    double omega_re = 1.0, omega_im = 0.0;
    bool saw_name = false, saw_q = false, saw_coeffs = false;

    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParseError(origin, line_no, "expected 'key = value'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (value.empty()) {
            throw ParseError(origin, line_no, "empty value for '" + key + "'");
        }

        if (key == "name") {
            desc.name = value;
            saw_name = true;
        } else if (key == "Q") {
            desc.q_scale = parse_double(origin, line_no, value);
            saw_q = true;
        } else if (key == "omega_re") {
            omega_re = parse_double(origin, line_no, value);
        } else if (key == "omega_im") {
            omega_im = parse_double(origin, line_no, value);
        } else if (key == "m_F") {
            desc.pole_order =
                static_cast<int>(parse_integer(origin, line_no, value));
        } else if (key == "coeffs") {
            desc.coeffs_spec = value;
            saw_coeffs = true;
        } else if (key == "gamma") {
            std::istringstream fields(value);
            std::string field;
            double nums[3];
            for (int i = 0; i < 3; ++i) {
                if (!std::getline(fields, field, ',')) {
                    throw ParseError(origin, line_no,
                                     "gamma needs <lambda>,<mu_re>,<mu_im>");
                }
                nums[i] = parse_double(origin, line_no, trim(field));
            }
            if (std::getline(fields, field, ',')) {
                throw ParseError(origin, line_no, "too many gamma fields");
            }
            desc.gamma_factors.push_back(
                GammaFactor{nums[0], {nums[1], nums[2]}});
        } else {
            throw ParseError(origin, line_no, "unknown key '" + key + "'");
        }
    }

    if (!saw_name) throw ParseError(origin, 0, "missing 'name'");
    if (!saw_q) throw ParseError(origin, 0, "missing 'Q'");
    if (!saw_coeffs) throw ParseError(origin, 0, "missing 'coeffs'");
    desc.root_number = {omega_re, omega_im};

    try {
        validate(desc);
        desc.coeffs = make_coeff_provider(desc.coeffs_spec, base_dir);
    } catch (const DomainError& e) {
        throw ParseError(origin, 0, e.what());
    }
    return desc;
}

SelbergDescriptor parse_descriptor(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open descriptor");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_descriptor_text(buffer.str(), path.string(),
                                 path.parent_path());
}

}  // namespace lfzero
