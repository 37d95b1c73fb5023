#pragma once

// Command dispatch for the normarg tool.  run_cli is a pure function of its
// arguments, the named file's contents and the NORMARG_MAX_ATOMS variable, so
// outputs are byte-stable across runs.

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dsa.hpp"
#include "explain.hpp"
#include "hierarchy.hpp"
#include "normfile.hpp"
#include "render.hpp"
#include "selfcheck.hpp"
#include "semantics.hpp"

namespace normarg::cli {

// 0 success, 1 usage or failed checks, 2 parse, 3 validation, 4 caps
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitParse = 2,
    kExitValidation = 3,
    kExitCaps = 4,
};

namespace detail {

inline const char* usage_text() {
    return
        "usage: normarg <command> [<file>] [options]\n"
        "\n"
        "commands:\n"
        "  verdict <file>     decide whether the consequence is obligatory or forbidden\n"
        "  statespace <file>  print the derivation-state grid\n"
        "  framework <file>   emit the argumentation framework (json or dot)\n"
        "  explain <file>     emit dispute-tree explanations (dialogue, dot or json)\n"
        "  check <file>       verify structural properties of the framework\n"
        "  selfcheck          run randomized verification against brute-force oracles\n"
        "\n"
        "options:\n"
        "  --format <fmt>  output format: text | dot | json | dialogue\n"
        "  --diagnostic    explain only: emit both rival families even without a verdict\n"
        "  --seed <n>      selfcheck only: random seed (default 1)\n"
        "  --count <n>     selfcheck only: number of instances (default 200)\n"
        "  --ascii         ASCII-only output glyphs\n"
        "  --help          show this message\n";
}

struct Options {
    std::string command;
    std::optional<std::string> file;
    std::optional<std::string> format;
    bool diagnostic = false;
    bool ascii = false;
    std::uint64_t seed = 1;
    std::size_t count = 200;
    bool seed_set = false;
    bool count_set = false;
    bool help = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::uint64_t parse_number(const std::string& flag, const std::string& text) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text[0] == '-')
        throw UsageError(flag + " expects a non-negative integer, got '" + text + "'");
    return value;
}

inline Options parse_options(const std::vector<std::string>& args) {
    Options opt;
    std::size_t i = 0;
    auto value_of = [&](const std::string& flag, const std::string& arg) {
        const std::size_t eq = arg.find('=');
        if (eq != std::string::npos) return arg.substr(eq + 1);
        if (++i >= args.size()) throw UsageError(flag + " expects a value");
        return args[i];
    };
    for (; i < args.size(); ++i) {
        const std::string& arg = args[i];
        const std::string head = arg.substr(0, arg.find('='));
        if (head == "--help" || head == "-h") {
            opt.help = true;
        } else if (head == "--format") {
            opt.format = value_of(head, arg);
        } else if (head == "--diagnostic") {
            opt.diagnostic = true;
        } else if (head == "--ascii") {
            opt.ascii = true;
        } else if (head == "--seed") {
            opt.seed = parse_number(head, value_of(head, arg));
            opt.seed_set = true;
        } else if (head == "--count") {
            opt.count = static_cast<std::size_t>(parse_number(head, value_of(head, arg)));
            opt.count_set = true;
        } else if (arg.size() >= 2 && arg[0] == '-' && arg != "-") {
            throw UsageError("unknown option '" + arg + "'");
        } else if (opt.command.empty()) {
            opt.command = arg;
        } else if (!opt.file) {
            opt.file = arg;
        } else {
            throw UsageError("unexpected argument '" + arg + "'");
        }
    }
    return opt;
}

inline void check_format(const Options& opt, const std::vector<std::string>& allowed) {
    if (!opt.format) return;
    for (const std::string& f : allowed)
        if (*opt.format == f) return;
    std::string valid;
    for (const std::string& f : allowed) valid += (valid.empty() ? "" : ", ") + f;
    throw UsageError("'" + opt.command + "' supports --format " + valid + ", got '" +
                     *opt.format + "'");
}

inline std::size_t atom_cap_from_env() {
    const char* env = std::getenv("NORMARG_MAX_ATOMS");
    if (env == nullptr) return kMaxAtoms;
    const std::string text(env);
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || value == 0)
        throw UsageError("NORMARG_MAX_ATOMS must be a positive integer, got '" + text + "'");
    return std::min<std::size_t>(static_cast<std::size_t>(value), kMaxAtoms);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline int cmd_verdict(const NormCase& c, const Options& opt, std::ostream& out) {
    out << render_verdict(verdict(c), opt.ascii);
    return kExitOk;
}

inline int cmd_statespace(const NormCase& c, const Options& opt, std::ostream& out) {
    out << render_statespace(state_space(c), opt.ascii);
    return kExitOk;
}

inline int cmd_framework(const NormCase& c, const Options& opt, std::ostream& out) {
    const DsaFramework fw = build_framework(c);
    if (opt.format.value_or("json") == "dot")
        out << render_framework_dot(fw, opt.ascii);
    else
        out << render_framework_json(fw);
    return kExitOk;
}

inline int cmd_explain(const NormCase& c, const Options& opt, std::ostream& out) {
    const DsaFramework fw = build_framework(c);
    const VerdictKind kind = verdict(c).kind;
    std::vector<Explanation> families;
    if (opt.diagnostic) {
        auto rivals = build_rival_explanations(fw);
        families.push_back(std::move(rivals.first));
        families.push_back(std::move(rivals.second));
    } else {
        families.push_back(build_explanation(fw));  // NoVerdict when NEITHER
    }
    const std::string format = opt.format.value_or("dialogue");
    if (format == "dot") {
        out << render_explanation_dot(fw, families, opt.ascii);
    } else if (format == "json") {
        out << explanation_json(fw, kind, families).dump(2) << "\n";
    } else {
        if (opt.diagnostic) out << "verdict: " << to_string(kind) << "\n";
        for (const Explanation& family : families) out << render_dialogue(fw, family, opt.ascii);
    }
    return kExitOk;
}

inline int cmd_check(const NormCase& c, std::ostream& out) {
    const DsaFramework fw = build_framework(c);
    const FrameworkReport report = check_framework_properties(fw);
    const Extension grounded = grounded_extension(to_aa(fw));
    bool ok = false;
    out << render_check_report(fw, report, grounded, &ok);
    return ok ? kExitOk : kExitUsage;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options opt;
    try {
        opt = detail::parse_options(args);
        if (opt.help) {
            out << detail::usage_text();
            return kExitOk;
        }
        if (opt.command.empty()) throw detail::UsageError("no command given");

        const bool known = opt.command == "verdict" || opt.command == "statespace" ||
                           opt.command == "framework" || opt.command == "explain" ||
                           opt.command == "check" || opt.command == "selfcheck";
        if (!known) throw detail::UsageError("unknown command '" + opt.command + "'");

        if (opt.command == "selfcheck") {
            if (opt.file) throw detail::UsageError("'selfcheck' does not take a file");
            if (opt.format) throw detail::UsageError("'selfcheck' does not support --format");
            if (opt.diagnostic)
                throw detail::UsageError("'selfcheck' does not support --diagnostic");
            return selfcheck::run_selfcheck(opt.seed, opt.count, out) ? kExitOk : kExitUsage;
        }

        if (!opt.file) throw detail::UsageError("'" + opt.command + "' needs a norm file");
        if (opt.seed_set) throw detail::UsageError("--seed only applies to 'selfcheck'");
        if (opt.count_set) throw detail::UsageError("--count only applies to 'selfcheck'");
        if (opt.diagnostic && opt.command != "explain")
            throw detail::UsageError("--diagnostic only applies to 'explain'");
        if (opt.command == "framework")
            detail::check_format(opt, {"json", "dot"});
        else if (opt.command == "explain")
            detail::check_format(opt, {"dialogue", "dot", "json"});
        else
            detail::check_format(opt, {"text"});

        const std::size_t atom_cap = detail::atom_cap_from_env();
        const std::string text = detail::read_file(*opt.file);
        const NormCase c = load_norm_case(text, atom_cap);

        if (opt.command == "verdict") return detail::cmd_verdict(c, opt, out);
        if (opt.command == "statespace") return detail::cmd_statespace(c, opt, out);
        if (opt.command == "framework") return detail::cmd_framework(c, opt, out);
        if (opt.command == "explain") return detail::cmd_explain(c, opt, out);
        return detail::cmd_check(c, out);
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'normarg --help' for usage\n";
        return kExitUsage;
    } catch (const NormFileError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NoVerdict& e) {
        err << "error: " << e.what() << "\n";
        err << "hint: use --diagnostic to see the rival tree families\n";
        return kExitValidation;
    } catch (const InvalidCase& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NotInExtension& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ExistenceViolation& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitCaps;
    }
}

}  // namespace normarg::cli
