#include "hyperoct/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "hyperoct/errors.hpp"
#include "hyperoct/numeral.hpp"
#include "hyperoct/oracle.hpp"
#include "hyperoct/rankcodec.hpp"
#include "hyperoct/sigperm.hpp"

namespace hyperoct::cli {
namespace {

constexpr char const* column_gap = "  ";

struct Options
{
    std::string to_hyper;
    std::string to_dec;
    bool compact = false;

    std::string window;

    std::string rank;
    Degree degree = 0;

    std::string from;
    std::string to;

    Degree selftest_degree = 4;
};

void print_enumeration(Options const& opts, std::ostream& out)
{
    auto const n = opts.degree;
    auto const max = place_value(n);
    Rank const first = opts.from.empty() ? Rank(1) : parse_decimal(opts.from);
    Rank const last = opts.to.empty() ? max : parse_decimal(opts.to);
    for (auto const& k : {first, last})
        if (k < 1 || k > max)
            throw RankOutOfRange(k.str(), max.str());
    if (first > last)
        throw Error("empty range: --from " + first.str() + " exceeds --to " + last.str());

    // Walk the codes with successor instead of converting every rank.
    auto digits = from_integer(first - 1, n);
    for (Rank k = first; k <= last; ++k)
    {
        auto const p = from_code(digits);
        out << k << column_gap << format_window(p) << column_gap << format_numeral(digits) << '\n';
        digits = successor(digits);
    }
}

struct CheckTally
{
    std::size_t passed = 0;
    std::size_t failed = 0;

    void report(std::ostream& out, bool ok, std::string const& name, Degree n, std::size_t cases)
    {
        (ok ? passed : failed) += 1;
        out << (ok ? "PASS" : "FAIL") << column_gap << "n=" << n << column_gap << name << column_gap
            << cases << " cases\n";
    }
};

bool run_selftest(Degree max_degree, std::ostream& out)
{
    if (max_degree > oracle::default_guard)
        throw DegreeTooLarge(max_degree, oracle::default_guard);

    CheckTally tally;
    for (Degree n = 0; n <= max_degree; ++n)
    {
        oracle::ReferenceOrder const order(n);
        auto const elements = order.elements();

        bool rank_ok = true;
        bool unrank_ok = true;
        bool inv_ok = true;
        for (std::size_t k = 1; k <= elements.size(); ++k)
        {
            auto const& p = elements[k - 1];
            rank_ok = rank_ok && rank(p) == Rank(k);
            unrank_ok = unrank_ok && unrank(Rank(k), n) == p;
            inv_ok = inv_ok && code(p) == code_by_roots(p);
        }
        tally.report(out, rank_ok, "rank-vs-oracle", n, elements.size());
        tally.report(out, unrank_ok, "unrank-vs-oracle", n, elements.size());
        tally.report(out, inv_ok, "inv-counting-vs-roots", n, elements.size());

        bool numeral_ok = true;
        auto const bound = place_value(n).convert_to<std::size_t>();
        auto digits = from_integer(0);
        for (std::size_t v = 0; v < bound; ++v)
        {
            numeral_ok = numeral_ok && to_integer(digits) == v && from_integer(v) == digits;
            digits = successor(digits);
        }
        tally.report(out, numeral_ok, "numeral-roundtrip", n, bound);
    }
    out << "selftest: " << tally.passed << " passed, " << tally.failed << " failed\n";
    return tally.failed == 0;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hyperoctahedral numerals and ranking of signed permutations", "hyperoct"};
    app.require_subcommand(1);
    Options opts;

    auto* convert = app.add_subcommand("convert", "Convert between decimal and hyperoctahedral numerals");
    auto* direction = convert->add_option_group("direction");
    direction->add_option("--to-hyper", opts.to_hyper, "Decimal integer to convert");
    direction->add_option("--to-dec", opts.to_dec, "Numeral to convert, e.g. 7:0:2:3:1");
    direction->require_option(1);
    convert->add_flag("--compact", opts.compact, "Print digits juxtaposed (all digits must be <= 9)");

    auto* code_cmd = app.add_subcommand("code", "Print the inversion code inv_1:...:inv_n");
    code_cmd->add_option("window", opts.window, "Window word, e.g. \"1 -3 4 2\"")->required();

    auto* rank_cmd = app.add_subcommand("rank", "Print the rank of a signed permutation");
    rank_cmd->add_option("window", opts.window, "Window word, e.g. \"1 -3 4 2\"")->required();

    auto* unrank_cmd = app.add_subcommand("unrank", "Print the signed permutation of a given rank");
    unrank_cmd->add_option("rank", opts.rank, "Rank in [1, 2^n n!]")->required();
    unrank_cmd->add_option("--n", opts.degree, "Degree")->required();

    auto* enumerate = app.add_subcommand("enumerate", "List rank, window word and code");
    enumerate->add_option("--n", opts.degree, "Degree")->required();
    enumerate->add_option("--from", opts.from, "First rank (default 1)");
    enumerate->add_option("--to", opts.to, "Last rank (default 2^n n!)");

    auto* selftest = app.add_subcommand("selftest", "Cross-check against brute-force enumeration");
    selftest->add_option("--n", opts.selftest_degree, "Largest degree to check")->capture_default_str();

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return success;
    }
    catch (CLI::CallForAllHelp const&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    }
    catch (CLI::ParseError const& e)
    {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    }

    try
    {
        if (convert->parsed())
        {
            if (!opts.to_hyper.empty())
            {
                auto const h = from_integer(parse_decimal(opts.to_hyper));
                out << format_numeral(h, opts.compact ? NumeralStyle::compact : NumeralStyle::colon) << '\n';
            }
            else
            {
                if (opts.compact)
                {
                    err << "usage error: --compact applies to --to-hyper only\n";
                    return usage_error;
                }
                out << to_integer(parse_numeral(opts.to_dec)) << '\n';
            }
        }
        else if (code_cmd->parsed())
        {
            out << format_numeral(code_numeral(parse_window(opts.window))) << '\n';
        }
        else if (rank_cmd->parsed())
        {
            out << rank(parse_window(opts.window)) << '\n';
        }
        else if (unrank_cmd->parsed())
        {
            out << format_window(unrank(parse_decimal(opts.rank), opts.degree)) << '\n';
        }
        else if (enumerate->parsed())
        {
            print_enumeration(opts, out);
        }
        else if (selftest->parsed())
        {
            if (!run_selftest(opts.selftest_degree, out))
            {
                err << "error: selftest failed\n";
                return domain_error;
            }
        }
    }
    catch (Error const& e)
    {
        err << "error: " << e.what() << '\n';
        return domain_error;
    }
    return success;
}

} // namespace hyperoct::cli
