#include "trigrid/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace trigrid {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
    GeneratorSpec spec;
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "squares") {
        spec.kind = GeneratorKind::Squares;
    } else if (head == "poly" || head == "poly-convex") {
        spec.kind = GeneratorKind::PolyConvex;
        if (args.empty()) throw ConfigError("poly generator needs coefficients, e.g. poly:1,0,0");
        for (const std::string& c : split(args, ',')) spec.coefficients.push_back(parse_scalar(c));
    } else if (head == "random-convex") {
        spec.kind = GeneratorKind::RandomConvex;
    } else if (head == "geometric") {
        spec.kind = GeneratorKind::Geometric;
        if (!args.empty()) spec.ratio = parse_scalar(args);
        if (spec.ratio <= 1) throw ConfigError("geometric ratio must be > 1");
    } else if (head == "arithmetic") {
        spec.kind = GeneratorKind::Arithmetic;
        if (!args.empty()) {
            const auto parts = split(args, ',');
            if (parts.size() != 2) throw ConfigError("arithmetic generator wants start,step");
            spec.start = parse_scalar(parts[0]);
            spec.step = parse_scalar(parts[1]);
            if (spec.step <= 0) throw ConfigError("arithmetic step must be positive");
        }
    } else if (head == "uniform-random") {
        spec.kind = GeneratorKind::UniformRandom;
    } else {
        throw ConfigError("unknown generator kind '" + head + "'");
    }
    return spec;
}

std::string GeneratorSpec::to_string() const {
    switch (kind) {
        case GeneratorKind::Squares:
            return "squares";
        case GeneratorKind::PolyConvex: {
            std::string out = "poly:";
            for (std::size_t i = 0; i < coefficients.size(); ++i) {
                if (i) out.push_back(',');
                out += format_scalar(coefficients[i]);
            }
            return out;
        }
        case GeneratorKind::RandomConvex:
            return "random-convex";
        case GeneratorKind::Geometric:
            return "geometric:" + format_scalar(ratio);
        case GeneratorKind::Arithmetic:
            return "arithmetic:" + format_scalar(start) + "," + format_scalar(step);
        case GeneratorKind::UniformRandom:
            return "uniform-random";
    }
    return "?";
}

std::uint64_t bounded_u64(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw DomainError("bounded_u64: zero bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % bound);
    for (;;) {
        const std::uint64_t draw = rng();
        if (draw < limit) return draw % bound;
    }
}

GroundSet gen_set(const GeneratorSpec& spec, std::size_t m, std::uint64_t seed) {
    if (m < 1) throw ConfigError("gen_set: m must be >= 1");
    std::vector<Scalar> values;
    values.reserve(m);
    switch (spec.kind) {
        case GeneratorKind::Squares: {
            for (std::size_t i = 0; i < m; ++i) values.push_back(Scalar(BigInt(i) * BigInt(i)));
            break;
        }
        case GeneratorKind::PolyConvex: {
            if (spec.coefficients.empty()) throw ConfigError("poly generator needs coefficients");
            for (std::size_t i = 0; i < m; ++i) {
                Scalar acc = 0;
                for (const Scalar& c : spec.coefficients) acc = acc * Scalar(BigInt(i)) + c;
                values.push_back(acc);
            }
            {
                GroundSet candidate = [&] {
                    std::vector<Scalar> copy = values;
                    std::sort(copy.begin(), copy.end());
                    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end() || copy != values)
                        throw ConfigError("poly generator produced a non-increasing sequence");
                    return GroundSet(std::move(copy));
                }();
                if (!is_convex(candidate))
                    throw ConfigError("poly generator produced a non-convex set");
                return candidate;
            }
        }
        case GeneratorKind::RandomConvex: {
            std::mt19937_64 rng(seed);
            BigInt x = 0;
            BigInt gap = 1 + BigInt(bounded_u64(rng, 4));
            values.push_back(Scalar(x));
            for (std::size_t i = 1; i < m; ++i) {
                x += gap;
                values.push_back(Scalar(x));
                gap += 1 + BigInt(bounded_u64(rng, 4));  // gaps strictly increase
            }
            break;
        }
        case GeneratorKind::Geometric: {
            Scalar v = 1;
            for (std::size_t i = 0; i < m; ++i) {
                values.push_back(v);
                v *= spec.ratio;
            }
            break;
        }
        case GeneratorKind::Arithmetic: {
            Scalar v = spec.start;
            for (std::size_t i = 0; i < m; ++i) {
                values.push_back(v);
                v += spec.step;
            }
            break;
        }
        case GeneratorKind::UniformRandom: {
            std::mt19937_64 rng(seed);
            const std::uint64_t range = 16 * static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m);
            std::set<std::uint64_t> seen;
            while (seen.size() < m) seen.insert(bounded_u64(rng, range));
            for (std::uint64_t v : seen) values.push_back(Scalar(BigInt(v)));
            break;
        }
    }
    GroundSet result(std::move(values));
    return result;
}

}  // namespace trigrid
