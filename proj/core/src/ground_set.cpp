#include "trigrid/ground_set.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace trigrid {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool valid_scalar_text(std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = 0;
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        return pos > start;
    };
    if (t[i] == '-' || t[i] == '+') ++i;
    if (!digits(i)) return false;
    if (i == t.size()) return true;
    if (t[i] != '/') return false;
    ++i;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (!digits(i)) return false;
    return i == t.size();
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    const std::string t = trim(text);
    if (!valid_scalar_text(t)) throw InputError("cannot parse rational '" + t + "'");
    auto slash = t.find('/');
    if (slash == std::string::npos) return Scalar(BigInt(t));
    BigInt num(t.substr(0, slash));
    BigInt den(t.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + t + "'");
    return make_scalar(std::move(num), std::move(den));
}

std::string format_scalar(const Scalar& value) {
    std::ostringstream out;
    out << value;  // cpp_rational streams as "p/q", or "p" when den == 1
    return out.str();
}

GroundSet::GroundSet(std::vector<Scalar> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) throw InputError("ground set must be nonempty");
    for (std::size_t i = 1; i < elems_.size(); ++i) {
        if (!(elems_[i - 1] < elems_[i]))
            throw InputError("ground set elements must be strictly increasing");
    }
}

GroundSet GroundSet::from_values(std::vector<Scalar> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return GroundSet(std::move(values));
}

bool GroundSet::contains(const Scalar& v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

bool is_convex(const GroundSet& x) {
    if (x.size() <= 2) return true;
    for (std::size_t i = 2; i < x.size(); ++i) {
        if (!(x[i] - x[i - 1] > x[i - 1] - x[i - 2])) return false;
    }
    return true;
}

DiffProfile rep_function(const GroundSet& x, const GroundSet& y) {
    DiffProfile profile;
    profile.nx = x.size();
    profile.ny = y.size();
    for (const Scalar& xv : x)
        for (const Scalar& yv : y) profile.entries[xv - yv] += 1;
    return profile;
}

std::int64_t rich_diff_count(const DiffProfile& profile, std::int64_t tau) {
    if (tau < 1) throw DomainError("rich_diff_count requires tau >= 1");
    std::int64_t count = 0;
    for (const auto& [s, delta] : profile.entries)
        if (delta >= tau) ++count;
    return count;
}

DParam calibrate_d(const GroundSet& x, const std::vector<GroundSet>& family,
                   const std::vector<std::int64_t>& taus) {
    if (family.empty()) throw ConfigError("calibrate_d: empty test family");
    if (taus.empty()) throw ConfigError("calibrate_d: empty tau list");
    for (std::int64_t tau : taus)
        if (tau < 1) throw ConfigError("calibrate_d: tau must be >= 1");

    DParam result;
    result.value = 0;
    const BigInt nx = x.size();
    for (std::size_t fi = 0; fi < family.size(); ++fi) {
        const GroundSet& y = family[fi];
        const DiffProfile profile = rep_function(x, y);
        const BigInt ny = y.size();
        for (std::int64_t tau : taus) {
            const std::int64_t count = rich_diff_count(profile, tau);
            // ratio = count * tau^3 / (|X| |Y|^2)
            const BigInt t(tau);
            const Scalar ratio = make_scalar(BigInt(count) * t * t * t, nx * ny * ny);
            if (ratio > result.value) {
                result.value = ratio;
                result.witnesses.clear();
            }
            if (count > 0 && ratio == result.value)
                result.witnesses.push_back({fi, tau, count});
        }
    }
    if (result.value == 0) {
        // All tested counts were zero; any positive d satisfies the tested
        // inequalities. Clamp at the floor 1/|X|.
        result.value = make_scalar(1, nx);
        result.witnesses.clear();
    }
    if (result.value > Scalar(nx))
        throw TheoremViolation("calibrate_d exceeded |X|; d(X) <= |X| is a theorem");
    return result;
}

GroundSet sumset(const GroundSet& a, const GroundSet& b) {
    std::vector<Scalar> values;
    values.reserve(a.size() * b.size());
    for (const Scalar& av : a)
        for (const Scalar& bv : b) values.push_back(av + bv);
    return GroundSet::from_values(std::move(values));
}

GroundSet product_set(const GroundSet& a, const GroundSet& b) {
    std::vector<Scalar> values;
    values.reserve(a.size() * b.size());
    for (const Scalar& av : a)
        for (const Scalar& bv : b) values.push_back(av * bv);
    return GroundSet::from_values(std::move(values));
}

GroundSet dilate(const GroundSet& a, const Scalar& factor) {
    if (factor == 0) throw DomainError("dilate by zero collapses the set");
    std::vector<Scalar> values;
    values.reserve(a.size());
    for (const Scalar& av : a) values.push_back(av * factor);
    return GroundSet::from_values(std::move(values));
}

GroundSet translate(const GroundSet& a, const Scalar& shift) {
    std::vector<Scalar> values;
    values.reserve(a.size());
    for (const Scalar& av : a) values.push_back(av + shift);
    return GroundSet(std::move(values));  // order preserved by translation
}

Scalar q_estimate(const GroundSet& a, const std::vector<GroundSet>& family) {
    if (family.empty()) throw ConfigError("q_estimate: empty family");
    std::optional<Scalar> best;
    for (const GroundSet& c : family) {
        const BigInt plus = sumset(a, c).size();
        const Scalar value = make_scalar(plus * plus, BigInt(a.size()) * BigInt(c.size()));
        if (!best || value < *best) best = value;
    }
    return *best;
}

Scalar qtilde_estimate(const GroundSet& a, const std::vector<Scalar>& shifts,
                       const std::vector<GroundSet>& family) {
    if (family.empty()) throw ConfigError("qtilde_estimate: empty family");
    if (shifts.empty()) throw ConfigError("qtilde_estimate: empty shift list");
    if (a[0] <= 0) throw DomainError("qtilde_estimate requires A to be strictly positive");
    std::optional<Scalar> best;
    for (const Scalar& shift : shifts) {
        if (shift == 0) throw DomainError("qtilde_estimate: zero shift");
        const GroundSet shifted = translate(a, shift);
        for (const GroundSet& c : family) {
            const BigInt prod = product_set(shifted, c).size();
            const Scalar value = make_scalar(prod * prod, BigInt(a.size()) * BigInt(c.size()));
            if (!best || value < *best) best = value;
        }
    }
    return *best;
}

Scalar mult_doubling(const GroundSet& a) {
    return make_scalar(BigInt(product_set(a, a).size()), BigInt(a.size()));
}

GroundSet load_ground_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open ground-set file: " + path.string());
    std::vector<Scalar> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        try {
            values.push_back(parse_scalar(t));
        } catch (const InputError& e) {
            throw InputError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (values.size() >= 2 && !(values[values.size() - 2] < values.back()))
            throw InputError(path.string() + ":" + std::to_string(lineno) +
                             ": elements must be strictly increasing");
    }
    if (values.empty()) throw InputError(path.string() + ": empty ground set");
    return GroundSet(std::move(values));
}

void save_ground_set(const GroundSet& set, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write ground-set file: " + path.string());
    for (const Scalar& v : set) out << format_scalar(v) << '\n';
    if (!out) throw InputError("write failed: " + path.string());
}

namespace {

BigInt lcm_of_denominators(const GroundSet& set) {
    BigInt l = 1;
    for (const Scalar& v : set) {
        const BigInt d = denominator(v);
        l = boost::multiprecision::lcm(l, d);
    }
    return l;
}

}  // namespace

std::optional<IntView> integerize(const GroundSet& set, std::int64_t max_abs) {
    const BigInt scale = lcm_of_denominators(set);
    IntView view;
    view.scale = scale;
    view.values.reserve(set.size());
    const BigInt limit(max_abs);
    for (const Scalar& v : set) {
        BigInt scaled = numerator(v) * (scale / denominator(v));
        if (scaled > limit || scaled < -limit) return std::nullopt;
        view.values.push_back(scaled.convert_to<std::int64_t>());
    }
    return view;
}

BigIntView integerize_big(const GroundSet& set) {
    const BigInt scale = lcm_of_denominators(set);
    BigIntView view;
    view.scale = scale;
    view.values.reserve(set.size());
    for (const Scalar& v : set) view.values.push_back(numerator(v) * (scale / denominator(v)));
    return view;
}

}  // namespace trigrid
