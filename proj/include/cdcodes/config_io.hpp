#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "cdcodes/codes.hpp"

namespace cdcodes {

/// Flat serialized form of a CodeConfig: "key value" lines, integers only,
/// '#' comments allowed. Field order is fixed so output is byte-stable.
struct CodeConfigDescriptor {
    std::int64_t p = 0;
    std::int64_t t = 0;
    std::int64_t r = 0;
    std::int64_t pi_a = 0;
    std::int64_t pi_b = 0;
    std::int64_t s = 0;
    std::int64_t M = 0;
    std::int64_t n = 0;
    std::int64_t beta_label = 0;
    std::int64_t sign = 0;
    std::int64_t rows = 0;

    static CodeConfigDescriptor from_config(const CodeConfig& cfg) {
        CodeConfigDescriptor d;
        d.p = static_cast<std::int64_t>(cfg.p());
        d.t = cfg.field().ctx.t;
        d.r = cfg.field().ctx.r;
        d.pi_a = cfg.field().pi.a.convert_to<std::int64_t>();
        d.pi_b = cfg.field().pi.b.convert_to<std::int64_t>();
        d.s = static_cast<std::int64_t>(cfg.field().s);
        d.M = static_cast<std::int64_t>(cfg.M());
        d.n = static_cast<std::int64_t>(cfg.n());
        d.beta_label = static_cast<std::int64_t>(cfg.beta().label);
        d.sign = cfg.beta().sign;
        d.rows = cfg.rows();
        return d;
    }

    /// Rebuild and re-validate everything: norm, primality, s, the beta power
    /// condition and row count are all checked again.
    CodeConfig to_config() const {
        VContext ctx(static_cast<int>(t), static_cast<int>(r));
        ResidueField field = build_field(VElement(pi_a, pi_b), ctx);
        if (static_cast<std::int64_t>(field.p) != p) {
            throw InvalidConfig("descriptor p does not match n(pi)");
        }
        if (static_cast<std::int64_t>(field.s) != s) {
            throw InvalidConfig("descriptor s does not match the label of w");
        }
        if (sign != 1 && sign != -1) {
            throw InvalidConfig("sign must be +1 or -1");
        }
        if (n <= 0 || M <= 0 || n * M != p - 1) {
            throw InvalidConfig("descriptor needs n*M = p-1");
        }
        std::uint64_t label = static_cast<std::uint64_t>(beta_label);
        std::uint64_t order = multiplicative_order(label, Modulus(field.p));
        BetaWitness beta{label, unlabel_min_norm(label, field), static_cast<int>(sign), order,
                         order == field.p - 1};
        return CodeConfig(field, static_cast<std::uint64_t>(n), beta, static_cast<int>(rows));
    }

    void save(std::ostream& os) const {
        os << "p " << p << "\n"
           << "t " << t << "\n"
           << "r " << r << "\n"
           << "pi_a " << pi_a << "\n"
           << "pi_b " << pi_b << "\n"
           << "s " << s << "\n"
           << "M " << M << "\n"
           << "n " << n << "\n"
           << "beta_label " << beta_label << "\n"
           << "sign " << sign << "\n"
           << "rows " << rows << "\n";
    }

    static CodeConfigDescriptor load(std::istream& is) {
        std::map<std::string, std::int64_t> kv;
        std::string line;
        while (std::getline(is, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string key;
            std::int64_t value;
            if (ls >> key >> value) {
                kv[key] = value;
            }
        }
        CodeConfigDescriptor d;
        auto get = [&](const std::string& key) {
            auto it = kv.find(key);
            if (it == kv.end()) {
                throw InvalidConfig("missing config key: " + key);
            }
            return it->second;
        };
        d.p = get("p");
        d.t = get("t");
        d.r = get("r");
        d.pi_a = get("pi_a");
        d.pi_b = get("pi_b");
        d.s = get("s");
        d.M = get("M");
        d.n = get("n");
        d.beta_label = get("beta_label");
        d.sign = get("sign");
        d.rows = get("rows");
        return d;
    }

    friend bool operator==(const CodeConfigDescriptor& a, const CodeConfigDescriptor& b) {
        return a.p == b.p && a.t == b.t && a.r == b.r && a.pi_a == b.pi_a && a.pi_b == b.pi_b &&
               a.s == b.s && a.M == b.M && a.n == b.n && a.beta_label == b.beta_label &&
               a.sign == b.sign && a.rows == b.rows;
    }
};

} // namespace cdcodes
