#include "relim/density.hpp"

#include "relim/errors.hpp"
#include "relim/kernels.hpp"

namespace relim {

namespace {

mpz_class falling_factorial(unsigned n, unsigned k) {
    mpz_class r = 1;
    for (unsigned i = 0; i < k; ++i) r *= static_cast<unsigned long>(n - i);
    return r;
}

} // namespace

Density density_p(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (n.size() < m.size()) return Rational(0);
    if (m.size() == 0) return Rational(1);
    const std::uint64_t copies = count_induced_copies(m, n);
    return ratio(mpz_class(static_cast<unsigned long>(copies)),
                 binomial(static_cast<unsigned>(n.size()), static_cast<unsigned>(m.size())));
}

Density density_t(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (m.size() == 0) return Rational(1);
    if (n.size() == 0) return Rational(0);
    const std::uint64_t homs = count_homomorphisms(m, n);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(n.size()),
                  static_cast<unsigned long>(m.size()));
    return ratio(mpz_class(static_cast<unsigned long>(homs)), den);
}

Density density_t0(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (n.size() < m.size()) return Rational(0);
    if (m.size() == 0) return Rational(1);
    const std::uint64_t homs = count_injective_homomorphisms(m, n);
    return ratio(mpz_class(static_cast<unsigned long>(homs)),
                 falling_factorial(static_cast<unsigned>(n.size()), static_cast<unsigned>(m.size())));
}

Density density_tind(const Structure& m, const Structure& n) {
    if (m.sig() != n.sig()) throw DomainError("structures have different signatures");
    if (n.size() < m.size()) return Rational(0);
    if (m.size() == 0) return Rational(1);
    const std::uint64_t embs = count_embeddings(m, n);
    return ratio(mpz_class(static_cast<unsigned long>(embs)),
                 falling_factorial(static_cast<unsigned>(n.size()), static_cast<unsigned>(m.size())));
}

Density automorphism_probability(const Structure& m) {
    if (m.size() == 0) return Rational(1);
    const std::uint64_t aut = automorphism_count(m);
    return ratio(mpz_class(static_cast<unsigned long>(aut)),
                 factorial(static_cast<unsigned>(m.size())));
}

} // namespace relim
