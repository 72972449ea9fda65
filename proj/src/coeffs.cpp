#include "lfzero/coeffs.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lfzero/errors.hpp"
#include "summation.hpp"

namespace lfzero {

namespace {

// Largest sieve/table sizes the desk-scale paths are allowed to allocate.
constexpr long kMaxSieveLimit = 30'000'000;
constexpr long kVonMangoldtCacheCap = 4'000'000;

}  // namespace

PrimeSieve::PrimeSieve(long limit) : limit_(limit) {
    if (limit < 1) {
        throw DomainError("PrimeSieve requires limit >= 1");
    }
    if (limit > kMaxSieveLimit) {
        throw DomainError("PrimeSieve limit exceeds the desk-scale cap");
    }
    table_.assign(static_cast<std::size_t>(limit) + 1, true);
    table_[0] = false;
    if (limit >= 1) table_[1] = false;
    for (long p = 2; p * p <= limit; ++p) {
        if (!table_[static_cast<std::size_t>(p)]) continue;
        for (long m = p * p; m <= limit; m += p) {
            table_[static_cast<std::size_t>(m)] = false;
        }
    }
}

bool PrimeSieve::is_prime(long n) const {
    if (n < 0 || n > limit_) {
        throw DomainError("PrimeSieve::is_prime out of table range");
    }
    return table_[static_cast<std::size_t>(n)];
}

double PrimeSieve::von_mangoldt(long n) const {
    if (n < 1) {
        throw DomainError("von_mangoldt requires n >= 1");
    }
    if (n > limit_) {
        throw DomainError("PrimeSieve::von_mangoldt out of table range");
    }
    if (n == 1) return 0.0;
    if (is_prime(n)) return std::log(static_cast<double>(n));
    // n = p^k with k >= 2 iff some integer k-th root of n is prime with an
    // exact power; test candidate roots around the floating-point root.
    for (int k = 2; (1L << k) <= n; ++k) {
        const long guess = std::lround(std::pow(static_cast<double>(n), 1.0 / k));
        for (long r = std::max(2L, guess - 1); r <= guess + 1; ++r) {
            long pw = 1;
            bool overflow = false;
            for (int i = 0; i < k; ++i) {
                if (pw > n / r) {
                    overflow = true;
                    break;
                }
                pw *= r;
            }
            if (!overflow && pw == n && is_prime(r)) {
                return std::log(static_cast<double>(r));
            }
        }
    }
    return 0.0;
}

double von_mangoldt(long n) {
    if (n < 1) {
        throw DomainError("von_mangoldt requires n >= 1");
    }
    if (n == 1) return 0.0;
    long p = 0;
    if (n % 2 == 0) {
        p = 2;
    } else {
        for (long d = 3; d * d <= n; d += 2) {
            if (n % d == 0) {
                p = d;
                break;
            }
        }
    }
    if (p == 0) return std::log(static_cast<double>(n));  // n itself prime
    long m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::complex<double> CoeffProvider::lambda_F_prime_power(long p, int k,
                                                         double /*log_p*/) const {
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    return lambda_F(pk);
}

double ZetaCoeffs::cached_von_mangoldt(long n) const {
    if (n < 1) {
        throw DomainError("lambda_F requires n >= 1");
    }
    if (n > kVonMangoldtCacheCap) {
        return lfzero::von_mangoldt(n);
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (static_cast<std::size_t>(n) >= cache_.size()) {
        const long new_size =
            std::min(kVonMangoldtCacheCap + 1, std::max(4096L, 2 * n + 1));
        // Least-prime-factor sieve, then divide out to test pure powers.
        std::vector<int32_t> lpf(static_cast<std::size_t>(new_size), 0);
        for (long i = 2; i < new_size; ++i) {
            if (lpf[static_cast<std::size_t>(i)] != 0) continue;
            for (long j = i; j < new_size; j += i) {
                if (lpf[static_cast<std::size_t>(j)] == 0) {
                    lpf[static_cast<std::size_t>(j)] = static_cast<int32_t>(i);
                }
            }
        }
        cache_.assign(static_cast<std::size_t>(new_size), 0.0);
        for (long m = 2; m < new_size; ++m) {
            const long p = lpf[static_cast<std::size_t>(m)];
            long rest = m;
            while (rest % p == 0) rest /= p;
            if (rest == 1) {
                cache_[static_cast<std::size_t>(m)] =
                    std::log(static_cast<double>(p));
            }
        }
    }
    return cache_[static_cast<std::size_t>(n)];
}

std::complex<double> ZetaCoeffs::lambda_F(long n) const {
    return {cached_von_mangoldt(n), 0.0};
}

std::complex<double> ZetaCoeffs::lambda_F_prime_power(long /*p*/, int /*k*/,
                                                      double log_p) const {
    return {log_p, 0.0};
}

namespace {

long gcd_long(long a, long b) { return std::gcd(a, b); }

}  // namespace

DirichletCoeffs::DirichletCoeffs(long modulus,
                                 std::vector<std::complex<double>> values,
                                 std::string label)
    : modulus_(modulus), values_(std::move(values)), label_(std::move(label)) {
    if (modulus_ < 1) {
        throw DomainError("character modulus must be >= 1");
    }
    if (values_.size() != static_cast<std::size_t>(modulus_)) {
        throw DomainError("character table must list one value per residue");
    }
    constexpr double kTol = 1e-12;
    for (long r = 0; r < modulus_; ++r) {
        const double mag = std::abs(values_[static_cast<std::size_t>(r)]);
        if (gcd_long(r, modulus_) == 1) {
            if (std::abs(mag - 1.0) > kTol) {
                throw DomainError("character value off the unit circle at residue " +
                                  std::to_string(r));
            }
        } else if (mag > kTol) {
            throw DomainError("character nonzero on non-unit residue " +
                              std::to_string(r));
        } else {
            values_[static_cast<std::size_t>(r)] = 0.0;
        }
    }
    const long one = modulus_ == 1 ? 0 : 1;
    if (std::abs(values_[static_cast<std::size_t>(one)] - 1.0) > kTol) {
        throw DomainError("character must satisfy chi(1) = 1");
    }
    for (long a = 0; a < modulus_; ++a) {
        if (gcd_long(a, modulus_) != 1) continue;
        for (long b = a; b < modulus_; ++b) {
            if (gcd_long(b, modulus_) != 1) continue;
            const std::complex<double> lhs =
                values_[static_cast<std::size_t>((a * b) % modulus_)];
            const std::complex<double> rhs =
                values_[static_cast<std::size_t>(a)] *
                values_[static_cast<std::size_t>(b)];
            if (std::abs(lhs - rhs) > 1e-10) {
                throw DomainError("character not completely multiplicative at (" +
                                  std::to_string(a) + "," + std::to_string(b) + ")");
            }
        }
    }
    self_dual_ = true;
    for (const auto& z : values_) {
        if (std::abs(z.imag()) > kTol) {
            self_dual_ = false;
            break;
        }
    }
}

std::complex<double> DirichletCoeffs::chi(long n) const {
    if (n < 0) {
        throw DomainError("chi requires n >= 0");
    }
    return values_[static_cast<std::size_t>(n % modulus_)];
}

std::complex<double> DirichletCoeffs::lambda_F(long n) const {
    const double vm = vm_.cached_von_mangoldt(n);
    if (vm == 0.0) return 0.0;
    return chi(n) * vm;
}

std::complex<double> DirichletCoeffs::lambda_F_prime_power(long p, int k,
                                                           double log_p) const {
    long pk_mod = 1;
    const long pm = p % modulus_;
    for (int i = 0; i < k; ++i) pk_mod = (pk_mod * pm) % modulus_;
    return values_[static_cast<std::size_t>(pk_mod)] * log_p;
}

std::shared_ptr<DirichletCoeffs> load_character_table(
    const std::filesystem::path& path, long modulus, const std::string& label) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open character table");
    }
    std::vector<std::complex<double>> values(static_cast<std::size_t>(
                                                 std::max(modulus, 1L)),
                                             0.0);
    std::vector<bool> seen(values.size(), false);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::string trimmed;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        }
        if (trimmed.empty()) continue;

        std::istringstream ss(trimmed);
        std::string field;
        double nums[3];
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ss, field, ',')) {
                throw ParseError(path.string(), line_no,
                                 "expected: residue, re, im");
            }
            std::size_t used = 0;
            try {
                nums[i] = std::stod(field, &used);
            } catch (const std::exception&) {
                throw ParseError(path.string(), line_no,
                                 "malformed number '" + field + "'");
            }
            if (used != field.size()) {
                throw ParseError(path.string(), line_no,
                                 "trailing junk in '" + field + "'");
            }
        }
        if (std::getline(ss, field, ',')) {
            throw ParseError(path.string(), line_no, "too many fields");
        }
        const double r_real = nums[0];
        const long residue = std::lround(r_real);
        if (residue != r_real || residue < 0 || residue >= modulus) {
            throw ParseError(path.string(), line_no,
                             "residue out of range [0, modulus)");
        }
        if (seen[static_cast<std::size_t>(residue)]) {
            throw ParseError(path.string(), line_no,
                             "duplicate residue " + std::to_string(residue));
        }
        seen[static_cast<std::size_t>(residue)] = true;
        values[static_cast<std::size_t>(residue)] = {nums[1], nums[2]};
    }
    try {
        return std::make_shared<DirichletCoeffs>(modulus, std::move(values),
                                                 label);
    } catch (const DomainError& e) {
        throw ParseError(path.string(), 0, e.what());
    }
}

std::shared_ptr<const CoeffProvider> make_coeff_provider(
    const std::string& spec, const std::filesystem::path& base_dir) {
    if (spec == "zeta") {
        return std::make_shared<ZetaCoeffs>();
    }
    const std::string prefix = "dirichlet:";
    if (spec.rfind(prefix, 0) == 0) {
        const std::string rest = spec.substr(prefix.size());
        const auto colon = rest.find(':');
        if (colon == std::string::npos) {
            throw DomainError("coefficient spec needs dirichlet:<q>:<index>");
        }
        long q = 0, index = 0;
        try {
            std::size_t used = 0;
            q = std::stol(rest.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("");
            const std::string idx_str = rest.substr(colon + 1);
            index = std::stol(idx_str, &used);
            if (used != idx_str.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw DomainError("malformed coefficient spec '" + spec + "'");
        }
        if (q < 1 || q > 100) {
            throw DomainError("dirichlet modulus out of desk-scale range [1,100]");
        }
        const auto table = base_dir / ("chi_q" + std::to_string(q) + "_" +
                                       std::to_string(index) + ".txt");
        return load_character_table(table, q, spec);
    }
    throw DomainError("unknown coefficient spec '" + spec + "'");
}

std::vector<std::complex<double>> prime_sum_limit_multi(
    const CoeffProvider& provider, int l_max, double X) {
    if (l_max < 1) {
        throw DomainError("prime_sum_limit requires l >= 1");
    }
    if (!(X >= 2.0)) {
        throw DomainError("prime_sum_limit requires X >= 2");
    }
    const long N = static_cast<long>(X);
    PrimeSieve sieve(N);

    std::vector<detail::NeumaierSumC> acc(static_cast<std::size_t>(l_max));
    sieve.for_each_prime([&](long p) {
        const double log_p = std::log(static_cast<double>(p));
        long pk = p;
        for (int k = 1;; ++k) {
            const std::complex<double> coeff =
                provider.lambda_F_prime_power(p, k, log_p);
            if (coeff != std::complex<double>(0.0, 0.0)) {
                const double t = k * log_p;  // log(p^k)
                std::complex<double> term =
                    coeff / static_cast<double>(pk);
                for (int l = 1; l <= l_max; ++l) {
                    acc[static_cast<std::size_t>(l - 1)].add(term);
                    term *= t;
                }
            }
            if (pk > N / p) break;
            pk *= p;
        }
    });

    const double log_X = std::log(X);
    const double m_F = provider.pole_order();
    std::vector<std::complex<double>> out(static_cast<std::size_t>(l_max));
    double log_X_pow = log_X;
    for (int l = 1; l <= l_max; ++l) {
        out[static_cast<std::size_t>(l - 1)] =
            acc[static_cast<std::size_t>(l - 1)].value() -
            (m_F / l) * log_X_pow;
        log_X_pow *= log_X;
    }
    return out;
}

std::complex<double> prime_sum_limit(const CoeffProvider& provider, int l,
                                     double X) {
    return prime_sum_limit_multi(provider, l, X)[static_cast<std::size_t>(l - 1)];
}

std::vector<ExtrapolatedSum> prime_sum_extrapolated_multi(
    const CoeffProvider& provider, int l_max, double X) {
    if (!(X >= 200.0)) {
        throw DomainError("prime_sum_extrapolated requires X >= 200");
    }
    const double xs[3] = {X / 100.0, X / 10.0, X};
    std::vector<std::complex<double>> a[3];
    for (int i = 0; i < 3; ++i) {
        a[i] = prime_sum_limit_multi(provider, l_max, xs[i]);
    }
    // The remainder of the bracketed sums decays like a power of X with
    // log-periodic oscillation, so no smooth model in 1/log X fits it and a
    // polynomial extrapolant only amplifies the oscillation (the h = 0
    // Lagrange weights through one decade of checkpoints are ~8/-25/18).
    // The approximant at the largest X is already the best of the three;
    // the movement across the checkpoints measures the oscillation envelope
    // near X and, tripled, bounds the remaining error with margin.
    std::vector<ExtrapolatedSum> out(static_cast<std::size_t>(l_max));
    for (int l = 0; l < l_max; ++l) {
        const std::size_t k = static_cast<std::size_t>(l);
        const double step1 = std::abs(a[1][k] - a[0][k]);
        const double step2 = std::abs(a[2][k] - a[1][k]);
        out[k] = {a[2][k], 3.0 * std::max(step1, step2)};
    }
    return out;
}

ExtrapolatedSum prime_sum_extrapolated(const CoeffProvider& provider, int l,
                                       double X) {
    return prime_sum_extrapolated_multi(provider, l,
                                        X)[static_cast<std::size_t>(l - 1)];
}

}  // namespace lfzero
