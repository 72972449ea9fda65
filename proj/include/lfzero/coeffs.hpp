#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace lfzero {

// Eratosthenes primality table on [0, limit].
class PrimeSieve {
  public:
    explicit PrimeSieve(long limit);

    long limit() const { return limit_; }
    bool is_prime(long n) const;

    // log p when n = p^k (k >= 1), else 0.  Factoring is a perfect-power
    // test plus a table lookup, so only valid up to limit().
    double von_mangoldt(long n) const;

    // Calls fn(p) for every prime p <= limit in increasing order.
    template <typename Fn>
    void for_each_prime(Fn&& fn) const {
        for (long p = 2; p <= limit_; ++p) {
            if (table_[static_cast<std::size_t>(p)]) fn(p);
        }
    }

  private:
    long limit_;
    std::vector<bool> table_;
};

// log p when n = p^k, else 0; trial division, intended for isolated calls
// (bulk consumers go through PrimeSieve).
double von_mangoldt(long n);

// Dirichlet-series coefficient source: supplies the generalized von Mangoldt
// values Lambda_F(n) together with the pole order the prime-sum limits need.
class CoeffProvider {
  public:
    virtual ~CoeffProvider() = default;

    virtual std::complex<double> lambda_F(long n) const = 0;
    virtual int pole_order() const = 0;
    virtual bool self_dual() const = 0;
    virtual std::string name() const = 0;

    // Lambda_F at a known prime power p^k (log_p = log p supplied by the
    // sieve walk); lets bulk prime sweeps skip refactoring each index.
    virtual std::complex<double> lambda_F_prime_power(long p, int k,
                                                      double log_p) const;
};

// Riemann zeta: Lambda_F = classical von Mangoldt, pole order 1.
class ZetaCoeffs : public CoeffProvider {
  public:
    std::complex<double> lambda_F(long n) const override;
    std::complex<double> lambda_F_prime_power(long p, int k,
                                              double log_p) const override;
    int pole_order() const override { return 1; }
    bool self_dual() const override { return true; }
    std::string name() const override { return "zeta"; }

  private:
    mutable std::mutex cache_mutex_;
    mutable std::vector<double> cache_;

    double cached_von_mangoldt(long n) const;
    friend class DirichletCoeffs;
};

// Dirichlet L(s, chi): Lambda_F(n) = chi(n) Lambda(n), entire (pole order 0).
// The character is given as an explicit value table over residues mod q and
// validated for complete multiplicativity on units.
class DirichletCoeffs : public CoeffProvider {
  public:
    DirichletCoeffs(long modulus, std::vector<std::complex<double>> values,
                    std::string label);

    std::complex<double> lambda_F(long n) const override;
    std::complex<double> lambda_F_prime_power(long p, int k,
                                              double log_p) const override;
    int pole_order() const override { return 0; }
    bool self_dual() const override { return self_dual_; }
    std::string name() const override { return label_; }

    long modulus() const { return modulus_; }
    std::complex<double> chi(long n) const;

  private:
    long modulus_;
    std::vector<std::complex<double>> values_;
    std::string label_;
    bool self_dual_;
    ZetaCoeffs vm_;
};

// Reads a character value table: lines "residue, re, im"; residues not
// listed map to 0; '#' comments allowed.
std::shared_ptr<DirichletCoeffs> load_character_table(
    const std::filesystem::path& path, long modulus, const std::string& label);

// Resolves a coefficient spec string: "zeta", or "dirichlet:<q>:<index>"
// whose value table is expected at <base_dir>/chi_q<q>_<index>.txt.
std::shared_ptr<const CoeffProvider> make_coeff_provider(
    const std::string& spec, const std::filesystem::path& base_dir);

// sum_{k <= X} Lambda_F(k)/k (log k)^{l-1}  -  m_F/l (log X)^l
// for every l in 1..l_max, one sieve pass over prime powers.
std::vector<std::complex<double>> prime_sum_limit_multi(
    const CoeffProvider& provider, int l_max, double X);

// Single-l convenience over prime_sum_limit_multi.
std::complex<double> prime_sum_limit(const CoeffProvider& provider, int l,
                                     double X);

// The conditionally convergent limit of prime_sum_limit as X -> inf,
// estimated from the checkpoints X/100, X/10, X.  The remainder decays like
// a power of X with log-periodic oscillation, so a polynomial model in
// 1/log X would only amplify the oscillation; the estimate is the plain
// approximant at X itself, and error_bar is three times the largest movement
// between consecutive checkpoints (a measured envelope of the oscillation).
struct ExtrapolatedSum {
    std::complex<double> value;
    double error_bar = 0.0;
};
ExtrapolatedSum prime_sum_extrapolated(const CoeffProvider& provider, int l,
                                       double X);

// All of l = 1..l_max in three sieve passes total.
std::vector<ExtrapolatedSum> prime_sum_extrapolated_multi(
    const CoeffProvider& provider, int l_max, double X);

}  // namespace lfzero
