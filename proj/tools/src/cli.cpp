#include "gapcode_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gapcode/analysis.hpp"
#include "gapcode/derived.hpp"
#include "gapcode/error.hpp"
#include "gapcode/io.hpp"
#include "gapcode/oracle.hpp"
#include "gapcode/sequences.hpp"

namespace gapcode::cli {

namespace {

struct CodeArgs {
    std::string construction = "c";
    int ell = 0;
    std::uint64_t t = 0;
    int r = 0;
    CLI::Option* t_opt = nullptr;
    CLI::Option* r_opt = nullptr;

    void attach(CLI::App* sub)
    {
        sub->add_option("--construction", construction, "c, chat, ct, dt or bt")
            ->check(CLI::IsMember({"c", "chat", "ct", "dt", "bt"}))
            ->capture_default_str();
        sub->add_option("--ell", ell, "ell; the base blocklength is 2^ell")->required();
        t_opt = sub->add_option("--t", t, "weight parameter for ct/dt, shortening for bt");
        r_opt = sub->add_option("--r", r, "r for chat (default r_max)");
    }

    Code code() const
    {
        std::optional<std::uint64_t> tt;
        std::optional<int> rr;
        if (t_opt->count() > 0) tt = t;
        if (r_opt->count() > 0) rr = r;
        return Code::make(parse_construction(construction), ell, tt, rr);
    }
};

struct StreamArgs {
    std::string message_format = "bits";
    std::string codeword_format = "ones";
    std::string output;
    unsigned jobs = 1;
    bool permissive = false;

    void attach(CLI::App* sub, bool decoding)
    {
        sub->add_option("--message-format", message_format, "bits or hex")
            ->check(CLI::IsMember({"bits", "hex"}))
            ->capture_default_str();
        if (!decoding) {
            sub->add_option("--codeword-format", codeword_format, "ones or bits")
                ->check(CLI::IsMember({"ones", "bits"}))
                ->capture_default_str();
        } else {
            auto* strict = sub->add_flag("--strict", "reject words outside the code (default)");
            sub->add_flag("--permissive", permissive, "decode any weight-w word without rejecting")->excludes(strict);
        }
        sub->add_option("--output", output, "write results to a file instead of stdout");
        sub->add_option("--jobs", jobs, "worker threads; output order is preserved")
            ->check(CLI::Range(1u, 256u))
            ->capture_default_str();
    }
};

class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(ErrorKind::parameter, "cannot open output file " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::vector<std::string> read_lines(std::istream& in)
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

template <typename Transform>
bool pump(const std::vector<std::string>& lines, unsigned jobs, std::ostream& out, Transform transform)
{
    std::vector<std::string> results(lines.size());
    std::vector<char> failed(lines.size(), 0);
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (lines[i].empty()) continue;
            try {
                results[i] = transform(lines[i]);
            } catch (const Error& e) {
                results[i] = "error: line " + std::to_string(i + 1) + ": " + std::string(to_string(e.kind())) +
                             ": " + e.what();
                failed[i] = 1;
            }
        }
    };
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(lines.size(), 1)));
    if (jobs <= 1) {
        work(0, lines.size());
    } else {
        std::vector<std::jthread> threads;
        for (unsigned j = 0; j < jobs; ++j) {
            threads.emplace_back(work, lines.size() * j / jobs, lines.size() * (j + 1) / jobs);
        }
    }
    bool any_failed = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        out << results[i] << '\n';
        any_failed = any_failed || failed[i];
    }
    return !any_failed;
}

int cmd_params(const CodeArgs& args, std::ostream& out)
{
    const auto code = args.code();
    const auto& p = code.params();
    out << "construction=" << to_string(p.construction) << " ell=" << p.ell;
    if (p.t) out << " t=" << *p.t;
    if (p.r) out << " r=" << *p.r;
    out << " n=" << p.n << " k=" << p.k << " w=" << p.w << '\n';
    out << "sequence=" << code.sequence().to_string() << '\n';
    out << "blocks=";
    for (std::size_t i = 0; i < code.block_lengths().size(); ++i) {
        out << (i ? "," : "") << code.block_lengths()[i];
    }
    out << '\n';
    return exit_ok;
}

int cmd_encode(const CodeArgs& args, const StreamArgs& stream, std::istream& in, std::ostream& out)
{
    const auto code = args.code();
    const auto k = code.params().k;
    const bool hex = stream.message_format == "hex";
    const auto format = stream.codeword_format == "bits" ? io::CodewordFormat::bits : io::CodewordFormat::ones;
    OutputTarget target(stream.output, out);
    const bool ok = pump(read_lines(in), stream.jobs, target.get(), [&](const std::string& line) {
        const auto x = hex ? io::from_hex(line, k) : BitString::parse(line);
        return io::render(code.encode(x), format);
    });
    return ok ? exit_ok : exit_data;
}

int cmd_decode(const CodeArgs& args, const StreamArgs& stream, std::istream& in, std::ostream& out)
{
    const auto code = args.code();
    const bool hex = stream.message_format == "hex";
    const auto mode = stream.permissive ? DecodeMode::permissive : DecodeMode::strict;
    OutputTarget target(stream.output, out);
    const bool ok = pump(read_lines(in), stream.jobs, target.get(), [&](const std::string& line) {
        const auto x = code.decode(io::parse_codeword(line), mode);
        return hex ? io::to_hex(x) : x.to_string();
    });
    return ok ? exit_ok : exit_data;
}

void require_table_range(int min_ell, int max_ell)
{
    if (min_ell < 3 || max_ell > kMaxEll || min_ell > max_ell) {
        throw Error(ErrorKind::parameter,
                    "ell range must satisfy 3 <= min <= max <= " + std::to_string(kMaxEll));
    }
}

int cmd_table(int max_ell, bool with_bounds, std::ostream& out)
{
    require_table_range(3, max_ell);
    out << "ell,f_ell,f_hat_ell,k_ell,k_hat_ell";
    if (with_bounds) out << ",floor_log2_binom,stirling_ub,necklace_ub,delta_ell";
    out << '\n';
    for (int ell = 3; ell <= max_ell; ++ell) {
        const auto f = f_ell(ell);
        const auto fh = f_hat(ell);
        out << ell << ",\"" << f.to_string() << "\",\"" << fh.to_string() << "\"," << f.k() << ',' << fh.k();
        if (with_bounds) {
            const auto b = bounds_report(ell);
            std::ostringstream tail;
            tail << ',' << b.log2_binom_floor << ',' << std::fixed << std::setprecision(6) << b.stirling_ub << ','
                 << b.necklace_ub << ',' << b.delta_ell;
            out << tail.str();
        }
        out << '\n';
    }
    return exit_ok;
}

int cmd_bounds(int min_ell, int max_ell, std::ostream& out, std::ostream& err)
{
    require_table_range(min_ell, max_ell);
    out << BoundsReport::csv_header() << '\n';
    for (int ell = min_ell; ell <= max_ell; ++ell) {
        const auto b = bounds_report(ell);
        out << b.csv_row() << '\n';
        const auto closed = k_hat_closed_form(ell);
        if (closed != b.k_hat_ell) {
            err << "note: ell=" << ell << ": short closed form for k_hat gives " << closed
                << ", the sequence sum gives " << b.k_hat_ell << " (reported)\n";
        }
    }
    return exit_ok;
}

int cmd_check_seq(const std::string& text, std::optional<int> ell, std::ostream& out)
{
    const auto s = parse_sequence(text, ell);
    const auto check = is_anchor_decodable(s);
    out << "sequence=" << s.to_string() << " ell=" << s.ell() << " k=" << s.k() << '\n';
    out << "anchor-decodable: " << (check.decodable ? "yes" : "no");
    if (!check.decodable) out << " (" << check.describe() << ')';
    out << '\n';
    return exit_ok;
}

struct VerifyArgs {
    bool exhaustive = false;
    bool sampled = false;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    std::uint64_t budget = std::uint64_t{1} << 25;
    unsigned jobs = 1;
    bool permissive = false;
    std::string output;
};

int cmd_verify(const CodeArgs& args, const VerifyArgs& v, std::ostream& out, std::ostream& err)
{
    const auto code = args.code();
    VerifyOptions options;
    options.mode = v.permissive ? DecodeMode::permissive : DecodeMode::strict;
    options.budget = v.budget;
    options.jobs = v.jobs;

    VerifyReport report;
    if (v.sampled) {
        report = verify_sampled(code.params(), v.samples, v.seed, options);
    } else {
        try {
            report = verify_exhaustive(code.params(), options);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::budget_exceeded) throw;
            err << "error: " << e.what() << "\n"
                << "hint: rerun with --sampled --samples N --seed S, or raise --budget\n";
            return exit_usage;
        }
    }
    OutputTarget target(v.output, out);
    target.get() << report.render();
    return report.ok() ? exit_ok : exit_verify;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Constant-weight codes from gap encoding", "gapcode"};
    app.require_subcommand(1);

    CodeArgs params_args;
    auto* params = app.add_subcommand("params", "print n, k, w and the characteristic sequence");
    params_args.attach(params);

    CodeArgs enc_args;
    StreamArgs enc_stream;
    auto* encode = app.add_subcommand("encode", "encode one message per stdin line");
    enc_args.attach(encode);
    enc_stream.attach(encode, false);

    CodeArgs dec_args;
    StreamArgs dec_stream;
    auto* decode = app.add_subcommand("decode", "decode one codeword per stdin line (bits or n=<n>:ones)");
    dec_args.attach(decode);
    dec_stream.attach(decode, true);

    int table_max = 10;
    bool table_bounds = false;
    auto* table = app.add_subcommand("table", "sequence table as CSV for ell = 3..max");
    table->add_option("--max-ell", table_max, "last ell")->capture_default_str();
    table->add_flag("--bounds", table_bounds, "append the bound columns");

    int bounds_min = 3;
    int bounds_max = 20;
    auto* bounds = app.add_subcommand("bounds", "dimension bounds as CSV");
    bounds->add_option("--min-ell", bounds_min, "first ell")->capture_default_str();
    bounds->add_option("--max-ell", bounds_max, "last ell")->capture_default_str();

    std::string seq_text;
    int seq_ell = 0;
    auto* check = app.add_subcommand("check-seq", "test a comma-separated sequence for anchor decodability");
    check->add_option("sequence", seq_text, "e.g. 1,2,2,4")->required();
    auto* seq_ell_opt = check->add_option("--ell", seq_ell, "blocklength exponent (default: sequence length)");

    CodeArgs ver_args;
    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "round-trip every (or a sample of) message");
    ver_args.attach(verify);
    auto* exh = verify->add_flag("--exhaustive", ver.exhaustive, "all 2^k messages (default)");
    verify->add_flag("--sampled", ver.sampled, "random messages plus the boundary family")->excludes(exh);
    verify->add_option("--samples", ver.samples, "sampled message count")->capture_default_str();
    verify->add_option("--seed", ver.seed, "generator seed")->capture_default_str();
    verify->add_option("--budget", ver.budget, "largest 2^k allowed for --exhaustive")->capture_default_str();
    verify->add_option("--jobs", ver.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    auto* vstrict = verify->add_flag("--strict", "strict decoding (default)");
    verify->add_flag("--permissive", ver.permissive, "permissive decoding")->excludes(vstrict);
    verify->add_option("--output", ver.output, "write the report to a file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*params) return cmd_params(params_args, out);
        if (*encode) return cmd_encode(enc_args, enc_stream, in, out);
        if (*decode) return cmd_decode(dec_args, dec_stream, in, out);
        if (*table) return cmd_table(table_max, table_bounds, out);
        if (*bounds) return cmd_bounds(bounds_min, bounds_max, out, err);
        if (*check) {
            std::optional<int> ell;
            if (seq_ell_opt->count() > 0) ell = seq_ell;
            return cmd_check_seq(seq_text, ell, out);
        }
        if (*verify) return cmd_verify(ver_args, ver, out, err);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::parameter ? exit_usage : exit_data;
    }
    return exit_usage;
}

} // namespace gapcode::cli
