#include "lfzero/zeros_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lfzero/errors.hpp"
#include "sha256.hpp"

namespace lfzero {

namespace {

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
    if (!std::isfinite(value)) {
        throw ParseError(origin, line_no, "non-finite value");
    }
    return value;
}

}  // namespace

ZeroTable parse_zero_text(const std::string& text, const std::string& origin) {
    ZeroTable table;
    table.source = origin;

    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    int columns = 0;  // 0 until the first data line fixes the mode
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        std::istringstream fields(stripped);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
        if (tokens.size() != 1 && tokens.size() != 2) {
            throw ParseError(origin, line_no,
                             "expected 'gamma' or 'beta gamma'");
        }
        if (columns == 0) {
            columns = static_cast<int>(tokens.size());
        } else if (columns != static_cast<int>(tokens.size())) {
            throw ParseError(origin, line_no, "inconsistent column count");
        }

        double beta = 0.5, gamma = 0.0;
        if (columns == 1) {
            gamma = parse_double(origin, line_no, tokens[0]);
        } else {
            beta = parse_double(origin, line_no, tokens[0]);
            gamma = parse_double(origin, line_no, tokens[1]);
            if (!(beta > 0.0 && beta < 1.0)) {
                throw ParseError(origin, line_no, "beta outside (0,1)");
            }
        }
        if (!(gamma > 0.0)) {
            throw ParseError(origin, line_no, "ordinate must be positive");
        }
        if (!table.ordinates.empty() && gamma <= table.ordinates.back()) {
            throw ParseError(origin, line_no, "ordinates must be ascending");
        }
        table.ordinates.push_back(gamma);
        if (columns == 2) table.betas.push_back(beta);
    }

    if (table.ordinates.empty()) {
        throw ParseError(origin, line_no, "no zeros in table");
    }
    table.max_ordinate = table.ordinates.back();
    return table;
}

ZeroTable parse_zero_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open zero table");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_zero_text(buffer.str(), path.string());
}

std::string serialize_zero_table(const ZeroTable& table) {
    std::string out;
    char buf[80];
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table.off_rh()) {
            std::snprintf(buf, sizeof(buf), "%.17g %.17g", table.betas[i],
                          table.ordinates[i]);
        } else {
            std::snprintf(buf, sizeof(buf), "%.17g", table.ordinates[i]);
        }
        out += buf;
        out += '\n';
    }
    return out;
}

long empirical_count(const ZeroTable& table, double T) {
    if (!(T > 0.0)) {
        throw DomainError("empirical_count requires T > 0");
    }
    if (T > table.max_ordinate) {
        throw CoverageError("requested T = " + std::to_string(T) +
                            " exceeds table coverage " +
                            std::to_string(table.max_ordinate));
    }
    const auto it = std::upper_bound(table.ordinates.begin(),
                                     table.ordinates.end(), T);
    return static_cast<long>(it - table.ordinates.begin());
}

DeviationProfile deviation_profile(const ZeroTable& table,
                                   const SelbergDescriptor& desc,
                                   const std::vector<double>& T_grid) {
    DeviationProfile profile;
    for (double T : T_grid) {
        CountSnapshot snap;
        snap.T = T;
        snap.empirical = empirical_count(table, T);
        snap.main_term = counting_main_term(desc, T);
        snap.deviation = static_cast<double>(snap.empirical) - snap.main_term;
        profile.snapshots.push_back(snap);
        if (T > 1.0) {
            profile.max_ratio = std::max(profile.max_ratio,
                                         std::abs(snap.deviation) / std::log(T));
        }
    }
    return profile;
}

std::vector<ManifestEntry> parse_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open manifest");
    }
    std::vector<ManifestEntry> entries;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '#') continue;
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        const auto c1 = stripped.find(',');
        const auto c2 =
            c1 == std::string::npos ? std::string::npos
                                    : stripped.find(',', c1 + 1);
        if (c2 == std::string::npos) {
            throw ParseError(path.string(), line_no,
                             "expected 'filename, sha256, citation'");
        }
        ManifestEntry entry;
        entry.filename = trim(stripped.substr(0, c1));
        entry.sha256 = trim(stripped.substr(c1 + 1, c2 - c1 - 1));
        entry.citation = trim(stripped.substr(c2 + 1));
        if (entry.filename.empty() || entry.sha256.size() != 64) {
            throw ParseError(path.string(), line_no,
                             "bad filename or checksum length");
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open file for checksum");
    }
    detail::Sha256 hash;
    char buf[65536];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        hash.update(buf, static_cast<std::size_t>(in.gcount()));
    }
    return hash.hex_digest();
}

void verify_manifest(const std::filesystem::path& path) {
    const auto entries = parse_manifest(path);
    const auto dir = path.parent_path();
    long index = 0;
    for (const auto& entry : entries) {
        ++index;
        const auto file = dir / entry.filename;
        std::string actual;
        try {
            actual = sha256_file(file);
        } catch (const ParseError&) {
            throw ParseError(path.string(), index,
                             "listed file missing: " + entry.filename);
        }
        std::string expected = entry.sha256;
        std::transform(expected.begin(), expected.end(), expected.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (actual != expected) {
            throw ParseError(path.string(), index,
                             "checksum mismatch for " + entry.filename);
        }
    }
}

}  // namespace lfzero
