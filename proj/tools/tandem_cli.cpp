#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tandem/enumeration.hpp"
#include "tandem/errors.hpp"
#include "tandem/fse.hpp"
#include "tandem/oracle.hpp"
#include "tandem/payload.hpp"
#include "tandem/ranking.hpp"
#include "tandem/seqfile.hpp"
#include "tandem/td_codec.hpp"

using namespace tandem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    int q = 3;
    int k = 2;
    std::optional<std::size_t> n;
    std::string j;
    std::string w;
    std::optional<double> epsilon;
    std::optional<std::size_t> ell;
    std::optional<std::size_t> m;
    std::string mode = "code";
    bool dna = false;
    bool digits = false;
    std::uint64_t seed = 0;
    std::size_t t = 0;
    std::size_t depth = 3;
    std::size_t budget = 1u << 22;
    std::size_t samples = 20;
    std::string scope = "all";
    std::string in;
    std::string out;
    bool as_json = false;
};

SymbolEncoding encoding(const Options& o) { return o.dna ? SymbolEncoding::dna : SymbolEncoding::digits; }

std::string read_all(const std::string& path)
{
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_all(const std::string& path, const std::string& data)
{
    if (path.empty() || path == "-") {
        std::cout << data;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << data;
}

std::vector<Word> read_strands(const Options& o)
{
    std::istringstream in(read_all(o.in));
    return read_sequence_file(in, o.q, encoding(o));
}

void write_strands(const Options& o, const std::vector<Word>& strands)
{
    std::ostringstream out;
    write_sequence_file(out, strands, encoding(o));
    write_all(o.out, out.str());
}

std::size_t need_n(const Options& o)
{
    if (!o.n) throw CLI::ValidationError("-n", "length is required");
    return *o.n;
}

FseParams fse_params(const Options& o, const DupSystem& sys)
{
    if (o.ell && o.m) return make_fse_params(sys, *o.ell, *o.m);
    if (o.epsilon) return choose_params(*o.epsilon, sys);
    throw CLI::ValidationError("fse", "give either -e or both --ell and --m");
}

int cmd_count(const Options& o)
{
    const DupSystem sys(o.q, o.k);
    const std::size_t n = need_n(o);
    const BigInt c = count_irr(n, sys);
    if (o.as_json)
        std::cout << json{{"n", n}, {"q", o.q}, {"k", o.k}, {"count", to_string(c)}}.dump() << '\n';
    else
        std::cout << c << '\n';
    return kExitOk;
}

int cmd_rate(const Options& o)
{
    const DupSystem sys(o.q, o.k);
    const RateInfo info = asymptotic_rate(sys);
    json r{{"q", o.q}, {"k", o.k}, {"lambda", info.lambda}, {"rate", info.rate}, {"kappa", info.kappa}};
    if (o.epsilon) {
        const FseParams p = choose_params(*o.epsilon, sys);
        r["epsilon"] = *o.epsilon;
        r["ell"] = p.ell;
        r["m"] = p.m;
        r["fse_rate"] = p.rate();
    }
    std::cout << r.dump(2) << '\n';
    return kExitOk;
}

int cmd_rank(const Options& o)
{
    const DupSystem sys(o.q, o.k);
    const Word x = parse_word(o.w, o.q, encoding(o));
    const BigInt r = rank_irr(x, sys);
    if (o.as_json)
        std::cout << json{{"word", o.w}, {"n", x.size()}, {"rank", to_string(r)}}.dump() << '\n';
    else
        std::cout << r << '\n';
    return kExitOk;
}

int cmd_unrank(const Options& o)
{
    const DupSystem sys(o.q, o.k);
    const std::size_t n = need_n(o);
    const BigInt j = parse_bigint(o.j);
    const std::string w = format_word(unrank_irr(n, j, sys), encoding(o));
    if (o.as_json)
        std::cout << json{{"n", n}, {"rank", o.j}, {"word", w}}.dump() << '\n';
    else
        std::cout << w << '\n';
    return kExitOk;
}

std::string trimmed(std::string s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

int cmd_encode(const Options& o)
{
    const DupSystem sys(o.q, o.k);
    const std::string raw = read_all(o.in);
    std::vector<Word> strands;
    if (o.mode == "code") {
        if (o.digits) throw CLI::ValidationError("--digits", "only available in fse mode");
        const TdCodec codec(CodeSpec{sys, need_n(o)});
        strands = payload::encode_code(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()), codec);
    } else {
        const FseCodec codec(fse_params(o, sys));
        if (o.digits) {
            strands.push_back(payload::encode_fse_digits(parse_word(trimmed(raw), o.q, encoding(o)), codec));
        } else {
            std::size_t per_strand = 0;
            if (o.n) {
                if (*o.n == 0 || *o.n % codec.params().m != 0)
                    throw CLI::ValidationError("-n", "fse strand length must be a positive multiple of m");
                per_strand = *o.n / codec.params().m;
            }
            strands = payload::encode_fse(
                std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()), codec, per_strand);
        }
    }
    write_strands(o, strands);
    return kExitOk;
}

int cmd_decode(const Options& o)
{
    const DupSystem sys(o.q, o.k);
    const std::vector<Word> strands = read_strands(o);
    payload::Bytes bytes;
    if (o.mode == "code") {
        if (o.digits) throw CLI::ValidationError("--digits", "only available in fse mode");
        const TdCodec codec(CodeSpec{sys, need_n(o)});
        bytes = payload::decode_code(strands, codec);
    } else {
        const FseCodec codec(fse_params(o, sys));
        if (o.digits) {
            Word all(o.q);
            for (const Word& s : strands) all.append(payload::decode_fse_digits(s, codec));
            write_all(o.out, format_word(all, encoding(o)) + "\n");
            return kExitOk;
        }
        bytes = payload::decode_fse(strands, codec);
    }
    write_all(o.out, std::string(bytes.begin(), bytes.end()));
    return kExitOk;
}

int cmd_channel(const Options& o)
{
    const DupSystem sys(o.q, o.k);
    std::vector<Word> strands = read_strands(o);
    std::size_t inserted = 0;
    for (std::size_t i = 0; i < strands.size(); ++i) {
        Descendant d = random_descendant(strands[i], o.t, sys, o.seed + i);
        for (const auto& e : d.events) inserted += e.length;
        strands[i] = std::move(d.word);
    }
    write_strands(o, strands);
    if (o.as_json)
        std::cerr << json{{"strands", strands.size()}, {"duplications", strands.size() * o.t},
                          {"inserted_symbols", inserted}}.dump()
                  << '\n';
    return kExitOk;
}

// --- verify -------------------------------------------------------------

json verify_counts(const DupSystem& sys, std::size_t max_n, const oracle::OracleBudget& budget, bool& ok)
{
    json rows = json::array();
    const IrrRanker ranker(sys, max_n);
    for (std::size_t n = 0; n <= max_n; ++n) {
        const auto brute = oracle::enumerate_irr_bruteforce(n, sys, budget);
        const BigInt c = count_irr(n, sys);
        bool order = c == brute.size();
        for (std::size_t j = 1; order && j <= brute.size(); ++j) {
            const Word x = ranker.unrank(n, j);
            order = ranker.rank(x) == j;
        }
        std::vector<Word> image;
        for (std::size_t j = 1; order && j <= brute.size(); ++j) image.push_back(ranker.unrank(n, j));
        std::sort(image.begin(), image.end());
        const bool set_equal = order && image == brute;
        ok = ok && set_equal;
        rows.push_back({{"n", n}, {"count", to_string(c)}, {"bruteforce", brute.size()}, {"pass", set_equal}});
    }
    return rows;
}

json verify_delta(const DupSystem& sys, std::size_t m, const oracle::OracleBudget& budget, bool& ok)
{
    const BigInt d = delta_min_degree(m, sys);
    const std::size_t brute = oracle::min_outdegree_bruteforce(m, sys, budget);
    const bool pass = d == brute;
    ok = ok && pass;
    json r{{"m", m}, {"delta", to_string(d)}, {"bruteforce", brute}, {"pass", pass}};
    if (auto printed = printed_delta_formula(m, sys)) {
        r["printed_formula"] = to_string(*printed);
        r["printed_formula_matches"] = *printed == brute;
    }
    return r;
}

json verify_roots(const DupSystem& sys, std::size_t max_len, std::size_t depth, std::size_t samples,
                  std::uint64_t seed, const oracle::OracleBudget& budget, bool& ok)
{
    std::mt19937_64 rng(seed);
    std::size_t checked = 0, failures = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t len = 1 + rng() % max_len;
        const BigInt total = count_irr(len, sys);
        const BigInt j = 1 + BigInt(rng()) % total;
        const Word x = unrank_irr(len, j, sys);
        for (const Word& y : oracle::descendants_within(x, depth, sys, budget)) {
            const auto roots = oracle::all_roots_bfs(y, sys, budget);
            ++checked;
            if (roots.size() != 1 || *roots.begin() != x || root(y, sys) != x) ++failures;
        }
    }
    ok = ok && failures == 0;
    return {{"samples", samples}, {"depth", depth}, {"descendants_checked", checked},
            {"failures", failures}, {"pass", failures == 0}};
}

int cmd_verify(const Options& o)
{
    const DupSystem sys(o.q, o.k);
    const oracle::OracleBudget budget{o.budget, std::max<std::size_t>(o.depth, 1)};
    bool ok = true;
    json report{{"q", o.q}, {"k", o.k}, {"scope", o.scope}};
    const bool all = o.scope == "all";
    try {
        if (all || o.scope == "counts")
            report["counts"] = verify_counts(sys, o.n.value_or(o.q == 3 ? 10 : 8), budget, ok);
        if (all || o.scope == "delta") {
            if (o.m) {
                report["delta"] = json::array({verify_delta(sys, *o.m, budget, ok)});
            } else {
                json rows = json::array();
                const auto [lo, hi] = delta_base_range(sys);
                for (std::size_t m = lo; m <= hi; ++m) rows.push_back(verify_delta(sys, m, budget, ok));
                report["delta"] = rows;
            }
        }
        if (all || o.scope == "roots")
            report["roots"] = verify_roots(sys, o.n.value_or(8), o.depth, o.samples, o.seed, budget, ok);
    } catch (const BudgetExceeded& e) {
        ok = false;
        report["budget_exceeded"] = e.what();
    }
    report["pass"] = ok;
    std::cout << report.dump(2) << '\n';
    return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tandem-duplication codes over irreducible words"};
    app.require_subcommand(1);
    Options o;

    auto system_opts = [&o](CLI::App* s) {
        s->add_option("-q", o.q, "alphabet size")->check(CLI::Range(3, 36));
        s->add_option("-k", o.k, "maximal duplication length")->check(CLI::IsMember({2, 3}));
        s->add_flag("--json", o.as_json, "machine-readable output");
    };
    auto file_opts = [&o](CLI::App* s) {
        s->add_option("-i,--input", o.in, "input file (default stdin)");
        s->add_option("-o,--output", o.out, "output file (default stdout)");
        s->add_flag("--dna", o.dna, "A/C/G/T symbols (q = 4)");
    };
    auto codec_opts = [&o](CLI::App* s) {
        s->add_option("--mode", o.mode, "fse or code")->check(CLI::IsMember({"fse", "code"}));
        s->add_option("-n", o.n, "code length (code) or strand length (fse)");
        s->add_option("-e,--epsilon", o.epsilon, "rate gap for fse parameters");
        s->add_option("--ell", o.ell, "fse message block length");
        s->add_option("--m", o.m, "fse state length");
        s->add_flag("--digits", o.digits, "fse only: raw q-ary message digits instead of bytes");
    };

    auto* count = app.add_subcommand("count", "number of irreducible words of length n");
    system_opts(count);
    count->add_option("-n", o.n, "word length")->required();

    auto* rate = app.add_subcommand("rate", "asymptotic rate, optionally fse parameters");
    system_opts(rate);
    rate->add_option("-e,--epsilon", o.epsilon, "rate gap");

    auto* rank = app.add_subcommand("rank", "rank of an irreducible word");
    system_opts(rank);
    rank->add_option("-w", o.w, "word")->required();
    rank->add_flag("--dna", o.dna, "A/C/G/T symbols (q = 4)");

    auto* unrank = app.add_subcommand("unrank", "irreducible word of given rank");
    system_opts(unrank);
    unrank->add_option("-n", o.n, "word length")->required();
    unrank->add_option("-j", o.j, "1-based rank")->required();
    unrank->add_flag("--dna", o.dna, "A/C/G/T symbols (q = 4)");

    auto* encode = app.add_subcommand("encode", "bytes to sequence file");
    system_opts(encode);
    file_opts(encode);
    codec_opts(encode);

    auto* decode = app.add_subcommand("decode", "sequence file to bytes");
    system_opts(decode);
    file_opts(decode);
    codec_opts(decode);

    auto* channel = app.add_subcommand("channel", "random tandem duplications per strand");
    system_opts(channel);
    file_opts(channel);
    channel->add_option("-t", o.t, "duplications per strand");
    channel->add_option("--seed", o.seed, "base seed; strand i uses seed + i");

    auto* verify = app.add_subcommand("verify", "oracle cross-checks");
    system_opts(verify);
    verify->add_option("--scope", o.scope, "counts, delta, roots or all")
        ->check(CLI::IsMember({"counts", "delta", "roots", "all"}));
    verify->add_option("-n", o.n, "maximal length (counts, roots)");
    verify->add_option("--m", o.m, "state length (delta)");
    verify->add_option("--depth", o.depth, "duplication depth (roots)");
    verify->add_option("--samples", o.samples, "random words (roots)");
    verify->add_option("--seed", o.seed, "sampling seed");
    verify->add_option("--budget", o.budget, "oracle work limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*count) return cmd_count(o);
        if (*rate) return cmd_rate(o);
        if (*rank) return cmd_rank(o);
        if (*unrank) return cmd_unrank(o);
        if (*encode) return cmd_encode(o);
        if (*decode) return cmd_decode(o);
        if (*channel) return cmd_channel(o);
        if (*verify) return cmd_verify(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
