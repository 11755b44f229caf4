#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "ainfty/coderivation.hpp"
#include "ainfty/errors.hpp"
#include "ainfty/example.hpp"
#include "ainfty/linfty.hpp"
#include "ainfty/structure_file.hpp"
#include "ainfty/verify.hpp"

namespace ainfty::cli {

namespace {

struct Source {
    std::string input;
    std::string builtin;

    void attach(CLI::App& cmd, bool required) {
        auto* in = cmd.add_option("--input", input, "Structure file");
        auto* bi = cmd.add_option("--builtin", builtin, "Built-in structure")
                       ->check(CLI::IsMember({std::string(example::builtin_name)}));
        in->excludes(bi);
        bi->excludes(in);
        if (required) {
            cmd.callback([in, bi] {
                if (in->count() + bi->count() == 0) throw CLI::RequiredError("--input or --builtin");
            });
        }
    }

    AStructure load() const {
        if (!input.empty()) return load_structure_file(input);
        return example::structure();
    }
};

int report_exit(const Report& r) { return r.pass() ? ok : check_failed; }

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of A-infinity structures on finite graded spaces", "ainfty"};
    app.require_subcommand(1);

    std::size_t max_arity = 0;
    std::size_t arity = 0;
    std::string check = "both";
    std::string format = "text";
    std::string word;
    bool primed = false;

    Source verify_src;
    auto* verify = app.add_subcommand("verify", "Exhaustively check the A-infinity relations");
    verify_src.attach(*verify, false);
    verify->add_option("--max-arity", max_arity, "Largest word length checked")->required()->check(CLI::PositiveNumber);
    verify->add_option("--check", check, "direct | coderivation | both")
        ->check(CLI::IsMember({"direct", "coderivation", "both"}));
    verify->add_option("--format", format, "text | machine")->check(CLI::IsMember({"text", "machine"}));

    auto* lemma1 = app.add_subcommand("lemma1", "Compare primed maps against their closed form");
    lemma1->add_option("--max-arity", max_arity, "Check arities 1..N")->required()->check(CLI::PositiveNumber);

    auto* lemma2 = app.add_subcommand("lemma2", "Compare D^2 against its top-arity reduction");
    lemma2->add_option("--max-arity", max_arity, "Check arities 2..N")->required()->check(CLI::Range(2, 64));

    Source linfty_src;
    auto* linfty = app.add_subcommand("linfty", "Check the symmetrized L-infinity relations");
    linfty_src.attach(*linfty, false);
    linfty->add_option("--max-arity", max_arity, "Largest word length checked")->required()->check(CLI::PositiveNumber);
    linfty->add_option("--format", format, "text | machine")->check(CLI::IsMember({"text", "machine"}));

    Source apply_src;
    auto* apply = app.add_subcommand("apply", "Evaluate one structure map on a basis word");
    apply_src.attach(*apply, true);
    apply->add_option("--arity", arity, "Map arity")->required()->check(CLI::PositiveNumber);
    apply->add_option("--word", word, "Comma-separated basis names")->required();
    apply->add_flag("--primed", primed, "Evaluate the primed map on the desuspended word");

    Source d2_src;
    auto* d2 = app.add_subcommand("d2", "Evaluate D^2 on one desuspended basis word");
    d2_src.attach(*d2, true);
    d2->add_option("--word", word, "Comma-separated basis names")->required();

    auto* exporter = app.add_subcommand("export", "Write a built-in structure truncated to a finite file");
    Source export_src;
    export_src.attach(*exporter, true);
    exporter->add_option("--max-arity", max_arity, "Keep arities 1..N")->required()->check(CLI::PositiveNumber);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (verify->parsed()) {
            const Report r = verify_structure(verify_src.load(), max_arity, *parse_check_mode(check));
            out << emit_report(r, *parse_report_format(format));
            return report_exit(r);
        }
        if (linfty->parsed()) {
            const Report r = verify_linfty(linfty_src.load(), max_arity);
            out << emit_report(r, *parse_report_format(format));
            return report_exit(r);
        }
        if (lemma1->parsed()) {
            bool all = true;
            for (std::size_t n = 1; n <= max_arity; ++n) {
                const bool holds = example::lemma1_check(n);
                all = all && holds;
                out << "n=" << n << " " << (holds ? "ok" : "MISMATCH") << "\n";
            }
            return all ? ok : check_failed;
        }
        if (lemma2->parsed()) {
            bool all = true;
            for (std::size_t n = 2; n <= max_arity; ++n) {
                const bool holds = example::lemma2_top_sum_check(n);
                all = all && holds;
                out << "n=" << n << " " << (holds ? "ok" : "MISMATCH") << "\n";
            }
            return all ? ok : check_failed;
        }
        if (apply->parsed()) {
            const AStructure s = apply_src.load();
            const Word w = parse_word(*s.space(), word);
            if (w.arity() != arity) {
                err << "error: --word has " << w.arity() << " letters but --arity is " << arity << "\n";
                return usage_error;
            }
            const MultiMap m = primed ? prime(s.map(arity)) : s.map(arity);
            out << format_vector(*s.space(), apply_map(m, w)) << "\n";
            return ok;
        }
        if (d2->parsed()) {
            const AStructure s = d2_src.load();
            const TensorPoly r = d_squared(s, parse_word(*s.space(), word));
            out << format_poly(*s.space(), r) << "\n";
            return r.is_zero() ? ok : check_failed;
        }
        if (exporter->parsed()) {
            out << serialize_structure(export_src.load().truncated(max_arity));
            return ok;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}

}  // namespace ainfty::cli
