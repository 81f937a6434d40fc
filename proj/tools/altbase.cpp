// altbase - exact computations in alternate base numeration systems.
//
// Every command prints one JSON object: {"command", "inputs", "payload"}.
// Exit status: 0 on success, 1 on a domain error (reported in the payload),
// 2 on a malformed invocation or unparsable input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altbase/altbase.hpp"

namespace {

using altbase::json;

struct GlobalOptions {
    std::int64_t cap = altbase::kDefaultCap;
    std::int64_t depth = 0;  // 0: follow cap
    bool trace = false;
    unsigned threads = 0;

    std::int64_t effective_depth() const { return depth > 0 ? depth : cap; }
};

std::int64_t env_default_cap() {
    if (const char* v = std::getenv("ALTBASE_CAP")) {
        try {
            long long cap = std::stoll(v);
            if (cap >= 1) return cap;
        } catch (...) {
        }
        throw altbase::ParseError("invalid ALTBASE_CAP value");
    }
    return altbase::kDefaultCap;
}

altbase::FieldElement parse_value_arg(const altbase::AlternateBase& base,
                                      const std::string& text) {
    if (text.find(',') == std::string::npos)
        return altbase::FieldElement::constant(base.field(),
                                               altbase::Rational::parse(text));
    std::vector<altbase::Rational> coords;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string part = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        coords.push_back(altbase::Rational::parse(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return altbase::FieldElement(base.field(), std::move(coords));
}

void emit(const std::string& command, const json& inputs, const json& payload) {
    json out{{"command", command}, {"inputs", inputs}, {"payload", payload}};
    std::cout << out.dump(2) << "\n";
}

int emit_domain_error(const std::string& command, const json& inputs,
                      const altbase::Error& e) {
    json payload{{"error", json{{"code", e.code()}, {"message", e.what()}}}};
    emit(command, inputs, payload);
    return 1;
}

json shift_summary(const altbase::AlternateBase& base, std::int64_t depth) {
    json shifts = json::array();
    for (size_t i = 1; i <= base.period(); ++i) {
        altbase::AlternateBase shifted = base.shift(static_cast<long>(i));
        altbase::ExpansionReport one = altbase::expansion_of_one(shifted, depth);
        altbase::QuasiGreedyWord star = altbase::quasi_greedy_one(shifted, depth);
        shifts.push_back(json{{"shift", i},
                              {"d1", one.word.str()},
                              {"d1_kind", to_string(one.kind)},
                              {"dstar1", star.word.str()},
                              {"dstar1_closed", star.closed}});
    }
    return shifts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for alternate base numeration systems"};
    app.require_subcommand(1);

    GlobalOptions opt;
    std::string base_ref, x_text, word_text, xs_text, delta_word_text;
    std::string direction = "to_delta";
    long m = 1;
    std::int64_t qmax = 40, samples = 100;
    std::uint64_t seed = 0x5eed;

    try {
        opt.cap = env_default_cap();
    } catch (const altbase::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    auto add_base = [&](CLI::App* cmd) {
        cmd->add_option("--base", base_ref, "base reference: pp:M, pp:M,shiftK or file:PATH")
            ->required();
    };
    auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", opt.cap, "maximum greedy digit steps");
    };
    auto add_depth = [&](CLI::App* cmd) {
        cmd->add_option("--depth", opt.depth, "comparison depth for quasi-greedy words");
    };

    CLI::App* c_expand = app.add_subcommand("expand", "greedy expansion of x >= 0");
    add_base(c_expand);
    c_expand->add_option("--x", x_text, "rational p/q or coordinate list c0,c1,...")
        ->required();
    add_cap(c_expand);

    CLI::App* c_one = app.add_subcommand("one", "greedy and quasi-greedy expansions of 1");
    add_base(c_one);
    add_cap(c_one);
    add_depth(c_one);

    CLI::App* c_adm = app.add_subcommand("admissible", "admissibility of a digit word");
    add_base(c_adm);
    c_adm->add_option("--word", word_text, "digit word, e.g. \"1,0(2,3)\"")->required();
    add_cap(c_adm);
    add_depth(c_adm);

    CLI::App* c_classify = app.add_subcommand("classify", "algebraic dashboard for a base");
    add_base(c_classify);
    add_cap(c_classify);
    add_depth(c_classify);

    CLI::App* c_certify = app.add_subcommand("certify", "periodicity certificate matrix");
    add_base(c_certify);
    c_certify->add_option("--xs", xs_text, "comma-separated rationals, one per period slot")
        ->required();
    add_cap(c_certify);

    CLI::App* c_value = app.add_subcommand("value", "exact value of a digit word");
    add_base(c_value);
    c_value->add_option("--word", word_text, "digit word")->required();

    CLI::App* c_convert =
        app.add_subcommand("convert", "block codec between base words and delta words");
    add_base(c_convert);
    c_convert->add_option("--direction", direction, "to_delta or from_delta")
        ->check(CLI::IsMember({"to_delta", "from_delta"}));
    c_convert->add_option("--word", word_text, "digit word (to_delta)");
    c_convert->add_option("--delta-word", delta_word_text,
                          "JSON delta word (from_delta)");

    CLI::App* c_pp = app.add_subcommand("pp-rewrite",
                                        "rewrite a delta expansion into the family base");
    c_pp->add_option("--m", m, "family parameter (minimal polynomial x^2-(m+1)x-1)")
        ->required();
    c_pp->add_option("--x", x_text, "rational in [0,1)")->required();
    add_cap(c_pp);
    c_pp->add_flag("--trace", opt.trace, "include the rewrite trace");

    CLI::App* c_gamma = app.add_subcommand("gamma-scan",
                                           "scan rationals for pure periodicity");
    add_base(c_gamma);
    c_gamma->add_option("--qmax", qmax, "maximum denominator")->required();
    add_cap(c_gamma);
    c_gamma->add_option("--threads", opt.threads, "worker threads (0 = auto)");

    CLI::App* c_fcheck = app.add_subcommand("f-check",
                                            "bounded finiteness-property sampling");
    add_base(c_fcheck);
    c_fcheck->add_option("--samples", samples, "number of sampled pairs");
    add_cap(c_fcheck);
    c_fcheck->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    json inputs = json::object();
    if (!base_ref.empty()) inputs["base"] = base_ref;
    if (!x_text.empty()) inputs["x"] = x_text;
    if (!word_text.empty()) inputs["word"] = word_text;
    if (!xs_text.empty()) inputs["xs"] = xs_text;
    if (c_pp->parsed()) inputs["m"] = m;
    if (c_gamma->parsed()) inputs["qmax"] = qmax;
    if (c_fcheck->parsed()) {
        inputs["samples"] = samples;
        inputs["seed"] = seed;
    }
    inputs["cap"] = opt.cap;

    try {
        if (c_pp->parsed()) {
            altbase::Rational x = altbase::Rational::parse(x_text);
            try {
                auto result = altbase::pp_rewrite(m, x, opt.cap, opt.trace);
                emit(command, inputs, altbase::to_json(result));
                return 0;
            } catch (const altbase::Error& e) {
                return emit_domain_error(command, inputs, e);
            }
        }

        altbase::AlternateBase base = altbase::base_from_ref(base_ref);

        try {
            if (c_expand->parsed()) {
                altbase::FieldElement x = parse_value_arg(base, x_text);
                altbase::FieldElement one =
                    altbase::FieldElement::constant(base.field(), altbase::Rational(1));
                json payload;
                if (x.sign() >= 0 && (x - one).sign() < 0) {
                    payload = altbase::to_json(altbase::greedy_expand(base, x, opt.cap));
                } else {
                    payload = altbase::to_json(altbase::expand_nonneg(base, x, opt.cap));
                }
                emit(command, inputs, payload);
                return 0;
            }
            if (c_one->parsed()) {
                altbase::ExpansionReport d1 = altbase::expansion_of_one(base, opt.cap);
                altbase::QuasiGreedyWord star =
                    altbase::quasi_greedy_one(base, opt.effective_depth());
                emit(command, inputs,
                     json{{"d1", altbase::to_json(d1)},
                          {"dstar1", json{{"word", star.word.str()},
                                          {"closed", star.closed}}}});
                return 0;
            }
            if (c_adm->parsed()) {
                altbase::DigitWord w = altbase::DigitWord::parse(word_text);
                auto res = altbase::is_admissible(base, w, opt.effective_depth());
                emit(command, inputs, altbase::to_json(res));
                return 0;
            }
            if (c_classify->parsed()) {
                auto cls = altbase::classify_delta(base.field()->minpoly(),
                                                   base.field()->isolator());
                json payload{{"delta", altbase::to_json(cls)},
                             {"delta_approx", base.field()->root_approx()},
                             {"period", base.period()}};
                json pos = json::array();
                for (const auto& row : altbase::positivity_report(base))
                    pos.push_back(altbase::to_json(row));
                payload["positivity"] = pos;
                payload["shifts"] = shift_summary(base, opt.effective_depth());
                emit(command, inputs, payload);
                return 0;
            }
            if (c_certify->parsed()) {
                std::vector<altbase::Rational> xs;
                size_t pos = 0;
                while (pos <= xs_text.size()) {
                    size_t comma = xs_text.find(',', pos);
                    xs.push_back(altbase::Rational::parse(xs_text.substr(
                        pos, comma == std::string::npos ? std::string::npos : comma - pos)));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
                auto cert = altbase::periodicity_certificate(base, xs, opt.cap);
                emit(command, inputs, altbase::to_json(cert));
                return 0;
            }
            if (c_value->parsed()) {
                altbase::DigitWord w = altbase::DigitWord::parse(word_text);
                altbase::FieldElement v = altbase::value_of(base, w);
                json payload;
                if (v.is_rational()) {
                    payload["value"] = v.as_rational().str();
                } else {
                    payload["value"] = nullptr;
                }
                payload["element"] = altbase::to_json(v);
                emit(command, inputs, payload);
                return 0;
            }
            if (c_convert->parsed()) {
                json payload{{"direction", direction}};
                if (direction == "to_delta") {
                    if (word_text.empty())
                        throw altbase::ParseError("convert to_delta requires --word");
                    altbase::DigitWord w = altbase::DigitWord::parse(word_text);
                    payload["delta_word"] = altbase::to_json(altbase::block_encode(base, w));
                } else {
                    if (delta_word_text.empty())
                        throw altbase::ParseError("convert from_delta requires --delta-word");
                    json dj;
                    try {
                        dj = json::parse(delta_word_text);
                    } catch (const nlohmann::json::exception& e) {
                        throw altbase::ParseError(std::string("invalid delta word JSON: ") +
                                                  e.what());
                    }
                    altbase::DeltaWord dw;
                    auto read_digits = [&](const json& arr) {
                        std::vector<altbase::DeltaDigit> out;
                        for (const auto& d : arr) {
                            std::vector<altbase::Digit> block;
                            for (const auto& digit : d.at("block"))
                                block.push_back(digit.get<altbase::Digit>());
                            altbase::FieldElement value =
                                altbase::FieldElement::zero(base.field());
                            auto v = base.digit_vector();
                            for (size_t i = 0; i < block.size(); ++i)
                                value += v[i] * altbase::Rational((long long)block[i]);
                            out.push_back({value, block});
                        }
                        return out;
                    };
                    dw.preperiod = read_digits(dj.at("preperiod"));
                    dw.period = read_digits(dj.at("period"));
                    payload["word"] = altbase::block_decode(base, dw).str();
                }
                emit(command, inputs, payload);
                return 0;
            }
            if (c_gamma->parsed()) {
                auto rep = altbase::gamma_scan(base, qmax, opt.cap, opt.threads);
                emit(command, inputs, altbase::to_json(rep));
                return 0;
            }
            if (c_fcheck->parsed()) {
                auto rep = altbase::finiteness_sample_check(base, samples, opt.cap, seed);
                emit(command, inputs, altbase::to_json(rep));
                return 0;
            }
        } catch (const altbase::ParseError&) {
            throw;  // malformed input, not a domain error
        } catch (const altbase::Error& e) {
            return emit_domain_error(command, inputs, e);
        }
    } catch (const altbase::ParseError& e) {
        json payload{{"error", json{{"code", e.code()}, {"message", e.what()}}}};
        emit(command, inputs, payload);
        return 2;
    } catch (const altbase::Error& e) {
        return emit_domain_error(command, inputs, e);
    }
    std::cerr << "no subcommand executed\n";
    return 2;
}
