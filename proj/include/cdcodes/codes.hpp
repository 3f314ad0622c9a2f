#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdcodes/modular.hpp"
#include "cdcodes/residue.hpp"

namespace cdcodes {

/// Dense polynomial over Z_p, little-endian coefficients.
using Poly = std::vector<std::uint64_t>;

namespace poly {

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + detail::mulmod(a[i], b[j], p)) % p;
        }
    }
    trim(out);
    return out;
}

/// Remainder of a by a monic divisor d.
inline Poly rem(Poly a, const Poly& d, std::uint64_t p) {
    trim(a);
    while (a.size() >= d.size()) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            std::uint64_t sub = detail::mulmod(c, d[i], p);
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

inline std::uint64_t eval(const Poly& a, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = (detail::mulmod(acc, x, p) + *it) % p;
    }
    return acc;
}

} // namespace poly

/// A fully determined code: field, length n = (p-1)/M, the beta witness with
/// its sign epsilon, and the number of parity rows (1..4, the paper's k+1).
/// Symbols are labels in Z_p.
class CodeConfig {
  public:
    CodeConfig(ResidueField field, std::uint64_t n, BetaWitness beta, int rows)
        : field_(std::move(field)), n_(n), beta_(std::move(beta)), rows_(rows) {
        if (n_ == 0 || (field_.p - 1) % n_ != 0) {
            throw InvalidConfig("n must divide p-1");
        }
        m_ = (field_.p - 1) / n_;
        if (rows_ < 1 || rows_ > 4) {
            throw InvalidConfig("parity rows must be in 1..4");
        }
        if (n_ < static_cast<std::uint64_t>(rows_) + 1) {
            throw InvalidConfig("need n >= rows+1");
        }
        std::uint64_t target = beta_.sign > 0 ? field_.s : field_.p - field_.s;
        if (mod_pow(beta_.label, n_, Modulus(field_.p)) != target) {
            throw InvalidConfig("beta^n does not equal the label of sign*w");
        }
        points_.resize(rows_);
        for (int l = 0; l < rows_; ++l) {
            points_[l] = mod_pow(beta_.label, m_ * l + 1, Modulus(field_.p));
        }
        for (int l = 0; l < rows_; ++l) {
            for (int j = l + 1; j < rows_; ++j) {
                if (points_[l] == points_[j]) {
                    throw InvalidConfig("parity-check evaluation points collide (beta order too small)");
                }
            }
        }
    }

    const ResidueField& field() const { return field_; }
    std::uint64_t p() const { return field_.p; }
    std::uint64_t n() const { return n_; }
    std::uint64_t M() const { return m_; }
    const BetaWitness& beta() const { return beta_; }
    int rows() const { return rows_; }
    int sign() const { return beta_.sign; }
    std::uint64_t message_length() const { return n_ - rows_; }

    /// Label of sign * w, the constant c with x^n - c the ambient modulus.
    std::uint64_t modulus_constant() const {
        return beta_.sign > 0 ? field_.s : field_.p - field_.s;
    }

    /// beta^(M l + 1) for row l; the codeword polynomial vanishes at these.
    const std::vector<std::uint64_t>& eval_points() const { return points_; }

  private:
    ResidueField field_;
    std::uint64_t n_;
    std::uint64_t m_ = 0;
    BetaWitness beta_;
    int rows_;
    std::vector<std::uint64_t> points_;
};

using Codeword = std::vector<std::uint64_t>;
using Syndrome = std::vector<std::uint64_t>;

/// Entry (l, c) = beta^(c (M l + 1)) mod p.
inline std::vector<std::vector<std::uint64_t>> build_parity_matrix(const CodeConfig& cfg) {
    std::vector<std::vector<std::uint64_t>> h(cfg.rows(), std::vector<std::uint64_t>(cfg.n()));
    for (int l = 0; l < cfg.rows(); ++l) {
        std::uint64_t point = cfg.eval_points()[l];
        std::uint64_t acc = 1;
        for (std::uint64_t c = 0; c < cfg.n(); ++c) {
            h[l][c] = acc;
            acc = detail::mulmod(acc, point, cfg.p());
        }
    }
    return h;
}

/// g(x) = (x - beta)(x - beta^(M+1))...(x - beta^(M(rows-1)+1)), monic of
/// degree rows; divides x^n - sign*s exactly.
inline Poly generator_polynomial(const CodeConfig& cfg) {
    Poly g{1};
    for (std::uint64_t point : cfg.eval_points()) {
        g = poly::mul(g, Poly{(cfg.p() - point) % cfg.p(), 1}, cfg.p());
    }
    return g;
}

/// Non-systematic encoding c(x) = m(x) g(x); deg < n so no reduction occurs.
inline Codeword encode(const std::vector<std::uint64_t>& message, const CodeConfig& cfg) {
    if (message.size() != cfg.message_length()) {
        throw LengthMismatch("message must have n - rows symbols");
    }
    Poly c = poly::mul(message, generator_polynomial(cfg), cfg.p());
    c.resize(cfg.n(), 0);
    return c;
}

inline Syndrome syndrome(const Codeword& word, const CodeConfig& cfg) {
    if (word.size() != cfg.n()) {
        throw LengthMismatch("received word must have n symbols");
    }
    Syndrome s(cfg.rows());
    for (int l = 0; l < cfg.rows(); ++l) {
        s[l] = poly::eval(word, cfg.eval_points()[l], cfg.p());
    }
    return s;
}

struct ErrorTerm {
    std::uint64_t position;
    std::uint64_t value;
};

struct DecodeResult {
    enum class Status { Clean, Corrected, DetectedUncorrectable };

    Status status;
    std::vector<ErrorTerm> errors;
    Codeword corrected; // empty when detected-uncorrectable
};

namespace detail {

inline bool all_zero(const Syndrome& s) {
    for (auto v : s) {
        if (v != 0) return false;
    }
    return true;
}

inline DecodeResult detected() {
    return DecodeResult{DecodeResult::Status::DetectedUncorrectable, {}, {}};
}

inline DecodeResult apply_corrections(Codeword word, std::vector<ErrorTerm> errors,
                                      const CodeConfig& cfg) {
    for (const auto& e : errors) {
        word[e.position] = (word[e.position] + cfg.p() - e.value % cfg.p()) % cfg.p();
    }
    if (!all_zero(syndrome(word, cfg))) {
        return detected();
    }
    return DecodeResult{DecodeResult::Status::Corrected, std::move(errors), std::move(word)};
}

// Shared logic of the one- and two-row single-error decoders: from the
// discrete logs M_l of the nonzero syndrome entries recover (i, j) with
// error value beta^j at position i.
inline std::optional<ErrorTerm> solve_single(const std::vector<std::uint64_t>& logs,
                                             const CodeConfig& cfg) {
    const std::uint64_t group = cfg.p() - 1;
    const std::uint64_t m = cfg.M();
    std::uint64_t delta = (logs[1] + group - logs[0]) % group;
    if (delta % m != 0) return std::nullopt;
    std::uint64_t i = (delta / m) % cfg.n();
    std::uint64_t j = (logs[0] + group - i % group) % group;
    // Every row must agree on j: M_l = (M l + 1) i + j mod (p-1).
    for (std::size_t l = 0; l < logs.size(); ++l) {
        std::uint64_t expect = (static_cast<std::uint64_t>(
                                    (static_cast<unsigned __int128>(m) * l + 1) * i % group) +
                                j) % group;
        if (logs[l] != expect) return std::nullopt;
    }
    return ErrorTerm{i, mod_pow(cfg.beta().label, j, Modulus(cfg.p()))};
}

inline std::optional<std::vector<std::uint64_t>> syndrome_logs(const Syndrome& s,
                                                               const CodeConfig& cfg) {
    std::vector<std::uint64_t> logs(s.size());
    Modulus m(cfg.p());
    for (std::size_t l = 0; l < s.size(); ++l) {
        if (s[l] == 0) return std::nullopt;
        auto lg = try_discrete_log(s[l], cfg.beta().label, m);
        if (!lg) return std::nullopt;
        logs[l] = *lg;
    }
    return logs;
}

} // namespace detail

/// rows = 1: corrects exactly the patterns e = beta^(n l) x^i (powers of
/// sign*w). L = dlog(s1); i = L mod n; value = beta^(L - i).
inline DecodeResult decode_single_restricted(const Codeword& word, const CodeConfig& cfg) {
    if (cfg.rows() != 1) {
        throw InvalidConfig("decode_single_restricted needs rows = 1");
    }
    Syndrome s = syndrome(word, cfg);
    if (detail::all_zero(s)) {
        return DecodeResult{DecodeResult::Status::Clean, {}, word};
    }
    auto big_l = try_discrete_log(s[0], cfg.beta().label, Modulus(cfg.p()));
    if (!big_l) {
        return detail::detected();
    }
    std::uint64_t i = *big_l % cfg.n();
    std::uint64_t value = mod_pow(cfg.beta().label, *big_l - i, Modulus(cfg.p()));
    return detail::apply_corrections(word, {ErrorTerm{i, value}}, cfg);
}

/// rows = 2: corrects any single error e_i x^i with e_i in <beta>
/// (all of V_pi* for primitive beta). i = (M2 - M1)/M mod n, j = M1 - i.
inline DecodeResult decode_single(const Codeword& word, const CodeConfig& cfg) {
    if (cfg.rows() != 2) {
        throw InvalidConfig("decode_single needs rows = 2");
    }
    Syndrome s = syndrome(word, cfg);
    if (detail::all_zero(s)) {
        return DecodeResult{DecodeResult::Status::Clean, {}, word};
    }
    auto logs = detail::syndrome_logs(s, cfg);
    if (!logs) {
        return detail::detected();
    }
    auto err = detail::solve_single(*logs, cfg);
    if (!err) {
        return detail::detected();
    }
    return detail::apply_corrections(word, {*err}, cfg);
}

/// rows = 3: corrects single errors and flags anything inconsistent with a
/// single error (the extra row must agree on both location and value).
inline DecodeResult decode_single_checked(const Codeword& word, const CodeConfig& cfg) {
    if (cfg.rows() != 3) {
        throw InvalidConfig("decode_single_checked needs rows = 3");
    }
    Syndrome s = syndrome(word, cfg);
    if (detail::all_zero(s)) {
        return DecodeResult{DecodeResult::Status::Clean, {}, word};
    }
    auto logs = detail::syndrome_logs(s, cfg);
    if (!logs) {
        return detail::detected();
    }
    auto err = detail::solve_single(*logs, cfg);
    if (!err) {
        return detail::detected();
    }
    return detail::apply_corrections(word, {*err}, cfg);
}

/// rows = 4: corrects double errors e_i x^i + e_j x^j. When the Lemma test
/// s1 s_{2M+1} = s_{M+1}^2 fires the pattern is treated as at most one error
/// and handled by the two-row procedure on (s1, s_{M+1}); otherwise the
/// locator quadratic y^2 - s_M y + p_M is solved mod p.
inline DecodeResult decode_double(const Codeword& word, const CodeConfig& cfg) {
    if (cfg.rows() != 4) {
        throw InvalidConfig("decode_double needs rows = 4");
    }
    Syndrome s = syndrome(word, cfg);
    if (detail::all_zero(s)) {
        return DecodeResult{DecodeResult::Status::Clean, {}, word};
    }
    const std::uint64_t p = cfg.p();
    Modulus m(p);
    auto sub = [p](std::uint64_t a, std::uint64_t b) { return (a + p - b) % p; };

    std::uint64_t d = sub(detail::mulmod(s[0], s[2], p), detail::mulmod(s[1], s[1], p));
    if (d == 0) {
        // At most one error. Recover it from the first two syndrome entries
        // and verify against all four rows.
        if (s[0] == 0 || s[1] == 0) {
            return detail::detected();
        }
        std::vector<std::uint64_t> logs(2);
        for (int l = 0; l < 2; ++l) {
            auto lg = try_discrete_log(s[l], cfg.beta().label, m);
            if (!lg) return detail::detected();
            logs[l] = *lg;
        }
        auto err = detail::solve_single(logs, cfg);
        if (!err) return detail::detected();
        return detail::apply_corrections(word, {*err}, cfg);
    }

    std::uint64_t dinv = mod_inverse(static_cast<std::int64_t>(d), m);
    std::uint64_t s_m = detail::mulmod(sub(detail::mulmod(s[0], s[3], p), detail::mulmod(s[1], s[2], p)), dinv, p);
    std::uint64_t p_m = detail::mulmod(sub(detail::mulmod(s[1], s[3], p), detail::mulmod(s[2], s[2], p)), dinv, p);

    std::uint64_t disc = sub(detail::mulmod(s_m, s_m, p), detail::mulmod(4 % p, p_m, p));
    auto roots = mod_sqrt(disc, m);
    if (!roots || roots->first == roots->second) {
        return detail::detected();
    }
    std::uint64_t half = mod_inverse(2, m);
    std::uint64_t y1 = detail::mulmod((s_m + roots->first) % p, half, p);
    std::uint64_t y2 = detail::mulmod((s_m + roots->second) % p, half, p);
    if (y1 == 0 || y2 == 0 || y1 == y2) {
        return detail::detected();
    }

    auto position_of = [&](std::uint64_t y) -> std::optional<std::uint64_t> {
        auto lg = try_discrete_log(y, cfg.beta().label, m);
        if (!lg || *lg % cfg.M() != 0) return std::nullopt;
        std::uint64_t i = (*lg / cfg.M()) % cfg.n();
        return i;
    };
    auto i = position_of(y1);
    auto j = position_of(y2);
    if (!i || !j || *i == *j) {
        return detail::detected();
    }

    std::uint64_t denom = sub(y1, y2);
    std::uint64_t a_val = detail::mulmod(sub(s[1], detail::mulmod(s[0], y2, p)),
                                         mod_inverse(static_cast<std::int64_t>(denom), m), p);
    std::uint64_t b_val = sub(s[0], a_val);
    if (a_val == 0 || b_val == 0) {
        return detail::detected();
    }
    // e_i = A beta^-i, e_j = B beta^-j.
    std::uint64_t beta_inv = mod_inverse(static_cast<std::int64_t>(cfg.beta().label), m);
    std::uint64_t e_i = detail::mulmod(a_val, mod_pow(beta_inv, *i, m), p);
    std::uint64_t e_j = detail::mulmod(b_val, mod_pow(beta_inv, *j, m), p);
    return detail::apply_corrections(word, {ErrorTerm{*i, e_i}, ErrorTerm{*j, e_j}}, cfg);
}

/// Decoder selected by the configured parity-row count.
inline DecodeResult decode(const Codeword& word, const CodeConfig& cfg) {
    switch (cfg.rows()) {
        case 1: return decode_single_restricted(word, cfg);
        case 2: return decode_single(word, cfg);
        case 3: return decode_single_checked(word, cfg);
        default: return decode_double(word, cfg);
    }
}

} // namespace cdcodes
