#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cdcodes/config_io.hpp"
#include "cdcodes/harness.hpp"

namespace cdcodes::cli {

// Exit codes: 0 success, 1 usage error, 2 infeasible (no representation or no
// beta; the Main Algorithm "stops"), 3 internal failure.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_infeasible = 2;
inline constexpr int exit_internal = 3;

namespace detail {

inline std::vector<std::uint64_t> parse_symbols(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
    }
    return out;
}

inline std::string join_symbols(const std::vector<std::uint64_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

inline std::string pairs_of(const std::vector<std::uint64_t>& word, const ResidueField& f) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        VElement rep = unlabel_min_norm(word[i], f);
        if (i) out += " ";
        out += "(" + rep.a.str() + "," + rep.b.str() + ")";
    }
    return out;
}

/// Field for (p, t, r) via the representation of p with matching t (smallest B).
inline std::optional<ResidueField> field_from_ptr(std::uint64_t p, int t, int r) {
    for (const auto& repr : representations(p, t)) {
        if (repr.t == t) {
            return build_field(derive_pi(repr, r), VContext(t, r));
        }
    }
    return std::nullopt;
}

inline std::string rate_str(const CodeCandidate& c, int rows) {
    return std::to_string(c.pair.n - static_cast<std::uint64_t>(rows)) + "/" +
           std::to_string(c.pair.n);
}

inline void print_candidate_machine(std::ostream& out, const CodeCandidate& c, std::size_t rank,
                                    int rows) {
    out << "candidate rank=" << rank << " feasible=" << (c.feasible ? 1 : 0) << " p=" << c.field.p
        << " t=" << c.repr.t << " r=" << c.r << " n=" << c.pair.n << " M=" << c.pair.M
        << " pi_a=" << c.field.pi.a.str() << " pi_b=" << c.field.pi.b.str() << " s=" << c.field.s;
    if (c.beta) {
        out << " beta=" << c.beta->label << " sign=" << c.beta->sign << " order=" << c.beta->order
            << " primitive=" << (c.beta->primitive ? 1 : 0);
    } else {
        out << " beta=none";
    }
    out << " rate=" << rate_str(c, rows) << "\n";
}

inline int run_search(std::ostream& out, std::uint64_t p, int t_max, int r_extra, int rows,
                      BetaPolicy policy, bool machine, const std::string& emit_config) {
    auto ranked = main_algorithm(p, t_max, r_extra, rows, policy);
    bool any_feasible = false;
    for (const auto& c : ranked) {
        if (c.feasible) any_feasible = true;
    }
    if (ranked.empty()) {
        out << (machine ? "search-stop reason=no-representation\n"
                        : "no representation p = a^2 + (2^t-1) b^2 found; the search stops\n");
        return exit_infeasible;
    }
    std::size_t rank = 0;
    if (machine) {
        for (const auto& c : ranked) {
            print_candidate_machine(out, c, ++rank, rows);
        }
    } else {
        out << "search p=" << p << " t_max=" << t_max << " r_extra=" << r_extra
            << " rows=" << rows << "\n";
        for (const auto& c : ranked) {
            ++rank;
            if (!c.feasible) continue;
            out << rank << ". t=" << c.repr.t << " r=" << c.r << " n=" << c.pair.n
                << " M=" << c.pair.M << " pi=" << c.field.pi.str() << " s=" << c.field.s
                << " beta=" << c.beta->label << " (" << c.beta->representative.str() << ")"
                << " sign=" << (c.beta->sign > 0 ? "+1" : "-1")
                << (c.beta->primitive ? " primitive" : " non-primitive")
                << " rate=" << rate_str(c, rows) << "\n";
        }
        rank = 0;
        for (const auto& c : ranked) {
            ++rank;
            if (c.feasible) continue;
            out << rank << ". t=" << c.repr.t << " r=" << c.r << " n=" << c.pair.n
                << " M=" << c.pair.M << " pi=" << c.field.pi.str() << " s=" << c.field.s
                << " beta=none rate=" << rate_str(c, rows) << "\n";
        }
    }
    if (!any_feasible) {
        return exit_infeasible;
    }
    if (!emit_config.empty()) {
        for (const auto& c : ranked) {
            if (!c.feasible) continue;
            CodeConfig cfg(c.field, c.pair.n, *c.beta, rows);
            std::ofstream fs(emit_config);
            CodeConfigDescriptor::from_config(cfg).save(fs);
            break;
        }
    }
    return exit_ok;
}

} // namespace detail

/// Parse and run. Returns the process exit code; writes to the given streams.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"codes over residue fields of Cayley-Dickson V-rings"};
    app.require_subcommand(1);

    // search
    std::uint64_t search_p = 0;
    int t_max = 6, r_extra = 0, rows = 2;
    std::string policy_name = "primitive";
    bool machine = false;
    std::string emit_config;
    auto* search_cmd = app.add_subcommand("search", "rank code candidates for a prime p");
    search_cmd->add_option("p", search_p, "prime to search")->required();
    search_cmd->add_option("--t-max", t_max, "largest doubling depth (default 6)");
    search_cmd->add_option("--r-extra", r_extra, "extra alpha-exponent escalation (default 0)");
    search_cmd->add_option("--rows", rows, "parity rows for the rate ranking (default 2)");
    search_cmd->add_option("--policy", policy_name, "beta choice: primitive|paper");
    search_cmd->add_flag("--machine", machine, "one structured record per line");
    search_cmd->add_option("--emit-config", emit_config, "write the top candidate as a config file");

    // field
    std::uint64_t field_p = 0;
    int field_t = 0, field_r = 0;
    bool dump_labels = false;
    auto* field_cmd = app.add_subcommand("field", "build the residue field for (p, t, r)");
    field_cmd->add_option("--p", field_p, "prime")->required();
    field_cmd->add_option("--t", field_t, "doubling depth")->required();
    field_cmd->add_option("--r", field_r, "alpha exponent")->required();
    field_cmd->add_flag("--dump-labels", dump_labels, "print the label table");
    field_cmd->add_flag("--machine", machine, "one structured record per line");

    // label / unlabel
    std::uint64_t conv_p = 0;
    int conv_t = 0, conv_r = 0;
    std::vector<long long> label_args;
    auto* label_cmd = app.add_subcommand("label", "labels of elements a+bw");
    label_cmd->add_option("--p", conv_p, "prime")->required();
    label_cmd->add_option("--t", conv_t, "doubling depth")->required();
    label_cmd->add_option("--r", conv_r, "alpha exponent")->required();
    label_cmd->add_option("pairs", label_args, "a b [a b ...]")->required();
    label_cmd->add_flag("--machine", machine);

    std::vector<std::uint64_t> unlabel_args;
    auto* unlabel_cmd = app.add_subcommand("unlabel", "minimal-norm representatives of labels");
    unlabel_cmd->add_option("--p", conv_p, "prime")->required();
    unlabel_cmd->add_option("--t", conv_t, "doubling depth")->required();
    unlabel_cmd->add_option("--r", conv_r, "alpha exponent")->required();
    unlabel_cmd->add_option("labels", unlabel_args, "k [k ...]")->required();
    unlabel_cmd->add_flag("--machine", machine);

    // make-config
    std::uint64_t mc_p = 0, mc_n = 0;
    int mc_t = 0, mc_r = 0;
    std::string mc_out;
    auto* mc_cmd = app.add_subcommand("make-config", "build a code config and save it");
    mc_cmd->add_option("--p", mc_p, "prime")->required();
    mc_cmd->add_option("--t", mc_t, "doubling depth")->required();
    mc_cmd->add_option("--r", mc_r, "alpha exponent")->required();
    mc_cmd->add_option("--n", mc_n, "code length (divides p-1)")->required();
    mc_cmd->add_option("--rows", rows, "parity rows (default 2)");
    mc_cmd->add_option("--policy", policy_name, "beta choice: primitive|paper");
    mc_cmd->add_option("--out", mc_out, "output file")->required();

    // encode / decode
    std::string config_path, message_text, word_text;
    bool as_pairs = false;
    auto* encode_cmd = app.add_subcommand("encode", "encode a message");
    encode_cmd->add_option("--config", config_path, "code config file")->required();
    encode_cmd->add_option("--message", message_text, "comma-separated labels")->required();
    encode_cmd->add_flag("--machine", machine);

    auto* decode_cmd = app.add_subcommand("decode", "decode a received word");
    decode_cmd->add_option("--config", config_path, "code config file")->required();
    decode_cmd->add_option("--word", word_text, "comma-separated labels")->required();
    decode_cmd->add_flag("--as-pairs", as_pairs, "also print symbols as (sigma,tau) pairs");
    decode_cmd->add_flag("--machine", machine);

    // simulate
    int sim_errors = 1;
    std::uint64_t sim_trials = 1000, sim_seed = 0;
    std::string sim_values = "uniform";
    auto* sim_cmd = app.add_subcommand("simulate", "error-injection simulation");
    sim_cmd->add_option("--config", config_path, "code config file")->required();
    sim_cmd->add_option("--errors", sim_errors, "errors per trial: 0, 1 or 2")->required();
    sim_cmd->add_option("--trials", sim_trials, "number of trials")->required();
    sim_cmd->add_option("--seed", sim_seed, "rng seed")->required();
    sim_cmd->add_option("--values", sim_values, "value distribution: uniform|powers-of-w");
    sim_cmd->add_flag("--machine", machine);

    // verify-paper
    auto* verify_cmd = app.add_subcommand("verify-paper", "recompute the worked-example claims");
    verify_cmd->add_flag("--machine", machine);

    std::vector<const char*> argv;
    argv.push_back("cdcodes");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    BetaPolicy policy =
        policy_name == "paper" ? BetaPolicy::Paper : BetaPolicy::PrimitivePreferred;

    try {
        if (*search_cmd) {
            return detail::run_search(out, search_p, t_max, r_extra, rows, policy, machine,
                                      emit_config);
        }

        if (*field_cmd) {
            auto field = detail::field_from_ptr(field_p, field_t, field_r);
            if (!field) {
                err << "no representation of " << field_p << " with t=" << field_t << "\n";
                return exit_infeasible;
            }
            if (machine) {
                out << "field p=" << field->p << " t=" << field_t << " r=" << field_r
                    << " pi_a=" << field->pi.a.str() << " pi_b=" << field->pi.b.str()
                    << " s=" << field->s << "\n";
            } else {
                out << "pi=" << field->pi.str() << " s=" << field->s << "\n";
            }
            if (dump_labels) {
                auto reps = minimal_representatives(*field);
                auto weights = weight_table(*field);
                for (std::uint64_t k = 0; k < field->p; ++k) {
                    if (machine) {
                        out << "label k=" << k << " sigma=" << reps[k].a.str()
                            << " tau=" << reps[k].b.str() << " weight=" << weights[k] << "\n";
                    } else {
                        out << k << ": " << reps[k].str() << " w_G=" << weights[k] << "\n";
                    }
                }
            }
            return exit_ok;
        }

        if (*label_cmd) {
            if (label_args.size() % 2 != 0) {
                err << "label expects a b pairs\n";
                return exit_usage;
            }
            auto field = detail::field_from_ptr(conv_p, conv_t, conv_r);
            if (!field) {
                err << "no representation of " << conv_p << " with t=" << conv_t << "\n";
                return exit_infeasible;
            }
            for (std::size_t i = 0; i < label_args.size(); i += 2) {
                VElement x(label_args[i], label_args[i + 1]);
                std::uint64_t k = label_of(x, *field);
                if (machine) {
                    out << "label a=" << label_args[i] << " b=" << label_args[i + 1] << " k=" << k
                        << "\n";
                } else {
                    out << x.str() << " -> " << k << "\n";
                }
            }
            return exit_ok;
        }

        if (*unlabel_cmd) {
            auto field = detail::field_from_ptr(conv_p, conv_t, conv_r);
            if (!field) {
                err << "no representation of " << conv_p << " with t=" << conv_t << "\n";
                return exit_infeasible;
            }
            for (std::uint64_t k : unlabel_args) {
                VElement rep = unlabel_min_norm(k % field->p, *field);
                if (machine) {
                    out << "unlabel k=" << k << " sigma=" << rep.a.str() << " tau=" << rep.b.str()
                        << "\n";
                } else {
                    out << k << " -> " << rep.str() << "\n";
                }
            }
            return exit_ok;
        }

        if (*mc_cmd) {
            auto field = detail::field_from_ptr(mc_p, mc_t, mc_r);
            if (!field) {
                err << "no representation of " << mc_p << " with t=" << mc_t << "\n";
                return exit_infeasible;
            }
            auto beta = find_beta(*field, mc_n, policy);
            if (!beta) {
                err << "no beta with beta^" << mc_n << " = +-w in this field\n";
                return exit_infeasible;
            }
            CodeConfig cfg(*field, mc_n, *beta, rows);
            std::ofstream fs(mc_out);
            if (!fs) {
                err << "cannot write " << mc_out << "\n";
                return exit_usage;
            }
            CodeConfigDescriptor::from_config(cfg).save(fs);
            out << "wrote " << mc_out << ": p=" << cfg.p() << " n=" << cfg.n() << " M=" << cfg.M()
                << " beta=" << cfg.beta().label << " rows=" << cfg.rows() << "\n";
            return exit_ok;
        }

        if (*encode_cmd || *decode_cmd || *sim_cmd) {
            std::ifstream fs(config_path);
            if (!fs) {
                err << "cannot read " << config_path << "\n";
                return exit_usage;
            }
            CodeConfig cfg = CodeConfigDescriptor::load(fs).to_config();

            if (*encode_cmd) {
                auto message = detail::parse_symbols(message_text);
                Codeword cw = encode(message, cfg);
                if (machine) {
                    out << "codeword symbols=" << detail::join_symbols(cw) << "\n";
                } else {
                    out << detail::join_symbols(cw) << "\n";
                }
                return exit_ok;
            }

            if (*decode_cmd) {
                auto word = detail::parse_symbols(word_text);
                DecodeResult res = decode(word, cfg);
                const char* status =
                    res.status == DecodeResult::Status::Clean
                        ? "clean"
                        : (res.status == DecodeResult::Status::Corrected ? "corrected"
                                                                         : "detected-uncorrectable");
                if (machine) {
                    out << "decode status=" << status;
                    for (const auto& e : res.errors) {
                        out << " pos=" << e.position << " val=" << e.value;
                    }
                    if (res.status != DecodeResult::Status::DetectedUncorrectable) {
                        out << " word=" << detail::join_symbols(res.corrected);
                    }
                    out << "\n";
                } else {
                    out << "status " << status << "\n";
                    for (const auto& e : res.errors) {
                        out << "error at " << e.position << " value " << e.value << "\n";
                    }
                    if (res.status != DecodeResult::Status::DetectedUncorrectable) {
                        out << detail::join_symbols(res.corrected) << "\n";
                        if (as_pairs) {
                            out << detail::pairs_of(res.corrected, cfg.field()) << "\n";
                        }
                    }
                }
                return exit_ok;
            }

            ChannelSpec spec;
            spec.error_count = sim_errors;
            spec.seed = sim_seed;
            spec.value_distribution = sim_values == "powers-of-w"
                                          ? ChannelSpec::Values::PowersOfW
                                          : ChannelSpec::Values::UniformNonzero;
            SimulationReport report = simulate_channel(cfg, spec, sim_trials);
            out << "simulate trials=" << report.trials << " corrected=" << report.corrected
                << " miscorrected=" << report.miscorrected << " detected=" << report.detected
                << " success=" << report.success_rate.str() << " rng=" << report.rng_algorithm
                << " seed=" << report.seed << "\n";
            return exit_ok;
        }

        if (*verify_cmd) {
            PaperCheckReport report = verify_paper_examples();
            for (const auto& c : report.claims) {
                const char* verdict = c.verdict == PaperClaim::Verdict::Match
                                          ? "match"
                                          : (c.verdict == PaperClaim::Verdict::Mismatch
                                                 ? "mismatch"
                                                 : "corrected-match");
                if (machine) {
                    out << "claim id=" << c.id << " verdict=" << verdict << "\n";
                } else {
                    out << "[" << verdict << "] " << c.id << ": expected " << c.expected
                        << "; computed " << c.computed << "\n";
                }
            }
            return exit_ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}

} // namespace cdcodes::cli
