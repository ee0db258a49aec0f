#include "geoint/multiquad.hpp"

#include "geoint/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace geoint {

MultiQuadField::MultiQuadField(std::vector<std::int64_t> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    if (std::adjacent_find(primes_.begin(), primes_.end()) != primes_.end())
        throw std::invalid_argument("MultiQuadField: repeated prime");
    if (primes_.size() > 8) throw std::invalid_argument("MultiQuadField: too many generators");
    radicands_.assign(dimension(), 1);
    for (std::size_t m = 0; m < dimension(); ++m)
        for (std::size_t i = 0; i < primes_.size(); ++i)
            if (m >> i & 1) radicands_[m] *= primes_[i];
}

std::shared_ptr<const MultiQuadField> MultiQuadField::generated_by(const std::vector<std::int64_t>& radicands) {
    std::vector<std::int64_t> ps;
    for (std::int64_t r : radicands) {
        std::int64_t m = square_decompose(Rational(static_cast<long>(r))).squarefree;
        if (m < 0) throw std::invalid_argument("MultiQuadField: negative radicand");
        for (std::int64_t p : prime_factors(m))
            if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
    }
    return std::make_shared<const MultiQuadField>(std::move(ps));
}

std::size_t MultiQuadField::mask_of(std::int64_t squarefree) const {
    std::size_t mask = 0;
    std::int64_t rest = squarefree;
    for (std::size_t i = 0; i < primes_.size(); ++i)
        if (rest % primes_[i] == 0) {
            mask |= std::size_t{1} << i;
            rest /= primes_[i];
        }
    if (rest != 1) throw std::invalid_argument("MultiQuadField: radicand outside the field");
    return mask;
}

MultiQuadElem::MultiQuadElem() {
    static const FieldPtr rationals = std::make_shared<const MultiQuadField>(std::vector<std::int64_t>{});
    field_ = rationals;
    c_.assign(1, Rational(0));
}

MultiQuadElem::MultiQuadElem(FieldPtr field) : field_(std::move(field)), c_(field_->dimension(), Rational(0)) {}

MultiQuadElem MultiQuadElem::rational(FieldPtr field, const Rational& r) {
    MultiQuadElem x(std::move(field));
    x.c_[0] = r;
    return x;
}

MultiQuadElem MultiQuadElem::sqrt_of(FieldPtr field, std::int64_t m, const Rational& c) {
    if (m <= 0) throw std::invalid_argument("sqrt_of: radicand must be positive");
    SquareDecomposition sd = square_decompose(Rational(static_cast<long>(m)));
    MultiQuadElem x(field);
    x.c_[field->mask_of(sd.squarefree)] = c * sd.root;
    return x;
}

bool MultiQuadElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool MultiQuadElem::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return r == 0; });
}

int MultiQuadElem::sign(const PrecisionPolicy& policy) const {
    std::vector<std::int64_t> rads(c_.size());
    for (std::size_t m = 0; m < c_.size(); ++m) rads[m] = field_->radicand(m);
    try {
        return certified_sign(c_, rads, policy);
    } catch (const PrecisionExhausted&) {
        return exact_sign();
    }
}

namespace {

// Sign of sum c[m] sqrt(rad(m)) over masks m < 2^k, recursing on the top generator.
int tower_sign(const std::vector<Rational>& c, const std::vector<std::int64_t>& primes, std::size_t k) {
    if (k == 0) return sgn(c[0]);
    std::size_t half = std::size_t{1} << (k - 1);
    std::vector<Rational> y(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<Rational> z(c.begin() + static_cast<std::ptrdiff_t>(half),
                            c.begin() + static_cast<std::ptrdiff_t>(2 * half));
    int sy = tower_sign(y, primes, k - 1);
    int sz = tower_sign(z, primes, k - 1);
    if (sz == 0) return sy;
    if (sy == 0) return sz;
    if (sy == sz) return sy;
    // y + z sqrt(p) with opposite signs: compare y^2 against p z^2 in the subfield.
    auto square = [&](const std::vector<Rational>& v) {
        std::vector<Rational> r(half, Rational(0));
        for (std::size_t s = 0; s < half; ++s) {
            if (v[s] == 0) continue;
            for (std::size_t t = 0; t < half; ++t) {
                if (v[t] == 0) continue;
                Rational f = v[s] * v[t];
                for (std::size_t i = 0; i + 1 < k; ++i)
                    if ((s & t) >> i & 1) f *= primes[i];
                r[s ^ t] += f;
            }
        }
        return r;
    };
    std::vector<Rational> y2 = square(y), z2 = square(z);
    for (std::size_t s = 0; s < half; ++s) y2[s] -= z2[s] * primes[k - 1];
    return sy * tower_sign(y2, primes, k - 1);
}

}  // namespace

int MultiQuadElem::exact_sign() const { return tower_sign(c_, field_->primes(), field_->primes().size()); }

double MultiQuadElem::approx() const {
    std::vector<std::int64_t> rads(c_.size());
    for (std::size_t m = 0; m < c_.size(); ++m) rads[m] = field_->radicand(m);
    return approximate_value(c_, rads);
}

MultiQuadElem MultiQuadElem::conj(std::size_t i) const {
    MultiQuadElem r = *this;
    for (std::size_t m = 0; m < c_.size(); ++m)
        if (m >> i & 1) r.c_[m] = -r.c_[m];
    return r;
}

MultiQuadElem MultiQuadElem::inverse() const {
    if (is_zero()) throw std::domain_error("MultiQuadElem: inverse of zero");
    // x * prod of successive conjugates is rational.
    MultiQuadElem num = rational(field_, 1);
    MultiQuadElem cur = *this;
    for (std::size_t i = 0; i < field_->primes().size(); ++i) {
        MultiQuadElem c = cur.conj(i);
        num *= c;
        cur *= c;
    }
    if (!cur.is_rational()) throw std::logic_error("MultiQuadElem: norm is not rational");
    return num * (Rational(1) / cur.c_[0]);
}

MultiQuadElem MultiQuadElem::operator-() const {
    MultiQuadElem r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

void MultiQuadElem::check_same_field(const MultiQuadElem& o) const {
    if (field_ != o.field_ && field_->primes() != o.field_->primes())
        throw std::invalid_argument("MultiQuadElem: field mismatch");
}

MultiQuadElem& MultiQuadElem::operator+=(const MultiQuadElem& o) {
    check_same_field(o);
    for (std::size_t m = 0; m < c_.size(); ++m) c_[m] += o.c_[m];
    return *this;
}

MultiQuadElem& MultiQuadElem::operator-=(const MultiQuadElem& o) {
    check_same_field(o);
    for (std::size_t m = 0; m < c_.size(); ++m) c_[m] -= o.c_[m];
    return *this;
}

MultiQuadElem& MultiQuadElem::operator*=(const MultiQuadElem& o) {
    check_same_field(o);
    std::vector<Rational> r(c_.size(), Rational(0));
    const auto& ps = field_->primes();
    for (std::size_t s = 0; s < c_.size(); ++s) {
        if (c_[s] == 0) continue;
        for (std::size_t t = 0; t < c_.size(); ++t) {
            if (o.c_[t] == 0) continue;
            Rational f = c_[s] * o.c_[t];
            std::size_t common = s & t;
            for (std::size_t i = 0; common >> i; ++i)
                if (common >> i & 1) f *= ps[i];
            r[s ^ t] += f;
        }
    }
    c_ = std::move(r);
    return *this;
}

MultiQuadElem& MultiQuadElem::operator*=(const Rational& r) {
    for (auto& v : c_) v *= r;
    return *this;
}

bool operator==(const MultiQuadElem& x, const MultiQuadElem& y) {
    return x.field_->primes() == y.field_->primes() && x.c_ == y.c_;
}

std::string MultiQuadElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t m = 0; m < c_.size(); ++m) {
        if (c_[m] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << geoint::to_string(c_[m]);
        if (m != 0) os << "*sqrt(" << field_->radicand(m) << ")";
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace geoint
