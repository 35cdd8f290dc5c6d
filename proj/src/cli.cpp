#include "springer_kit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "springer_kit/json_io.hpp"
#include "springer_kit/springer.hpp"
#include "springer_kit/weyl.hpp"

namespace springer_kit::cli {

namespace {

constexpr const char* kRankVariable = "SPRINGER_KIT_MAX_RANK";

using Row = std::vector<std::string>;

// Display width in code points; cells may contain the UTF-8 empty-set sign.
std::size_t width_of(const std::string& text) {
  return static_cast<std::size_t>(std::count_if(
      text.begin(), text.end(),
      [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void write_table(std::ostream& out, const Row& header,
                 const std::vector<Row>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c)
    widths[c] = width_of(header[c]);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], width_of(row[c]));
    }
  }
  auto line = [&](const Row& row) {
    std::string text;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) text += "  ";
      text += row[c];
      if (c + 1 < row.size()) text.append(widths[c] - width_of(row[c]), ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string wavefront_text(const Symbol& x) {
  try {
    return to_string(wavefront_partition(x).partition());
  } catch (const Error& err) {
    if (err.code() != ErrorCode::RepeatedEntries) throw;
    return "-";
  }
}

int run_classes(const Command& cmd, std::ostream& out, const Bounds& bounds) {
  const auto classes = enumerate_symplectic_classes(cmd.n, bounds.class_bound);
  if (cmd.format == OutputFormat::Json) {
    for (const auto& label : classes) out << class_record(label).dump() << '\n';
    return kExitOk;
  }
  std::vector<Row> rows;
  for (const auto& label : classes) {
    const auto data = n_delta(label);
    rows.push_back({std::to_string(label.half_rank()),
                    to_string(label.partition()), std::to_string(data.n_u),
                    std::to_string(data.delta_u),
                    std::to_string(component_group_order(label))});
  }
  write_table(out, {"n", "partition", "n_u", "delta_u", "|A(u)|"}, rows);
  return kExitOk;
}

int run_springer(const Command& cmd, std::ostream& out) {
  const SpringerImage image = springer(*cmd.bipartition);
  if (cmd.format == OutputFormat::Json) {
    out << springer_record(image).dump() << '\n';
    return kExitOk;
  }
  write_table(
      out, {"bipartition", "symbol", "rank", "wavefront"},
      {{to_string(image.source), display(image.symbol),
        std::to_string(image.symbol.rank()), wavefront_text(image.symbol)}});
  return kExitOk;
}

int emit_reports(const std::vector<VerificationReport>& reports,
                 OutputFormat format, std::ostream& out) {
  bool all_hold = true;
  std::vector<Row> rows;
  for (const auto& report : reports) {
    all_hold = all_hold && report.identity_holds;
    if (format == OutputFormat::Json) {
      out << verification_record(report).dump() << '\n';
      continue;
    }
    const auto& d = report.datum;
    rows.push_back(
        {std::to_string(d.e), std::to_string(d.f), std::to_string(d.n),
         yes_no(d.cuspidal_exists), display(report.j_symbol),
         display(report.springer_symbol), to_string(report.lambda.partition()),
         std::to_string(report.a_order), std::to_string(d.n_chi),
         yes_no(report.identity_holds), yes_no(report.mu_matches_closed_form)});
  }
  if (format == OutputFormat::Table) {
    write_table(out,
                {"e", "f", "n", "cuspidal", "j-induced", "springer", "lambda",
                 "|A(u)|", "n_chi", "identity", "mu_closed_form"},
                rows);
  }
  return all_hold ? kExitOk : kExitVerificationFailed;
}

int run_series(const Command& cmd, std::ostream& out) {
  const auto labels = series_labels(static_cast<int>(cmd.n));
  if (cmd.format == OutputFormat::Json) {
    for (const auto& label : labels) {
      out << series_label_record(label).dump() << '\n';
    }
    return kExitOk;
  }
  std::vector<Row> rows;
  for (const auto& label : labels) {
    rows.push_back(
        {std::to_string(label.involution.n), std::to_string(label.involution.a),
         std::to_string(label.involution.b), std::to_string(label.a_order),
         std::to_string(label.h1_class)});
  }
  write_table(out, {"n", "a", "b", "|A(s)|", "h1_class"}, rows);
  return kExitOk;
}

int run_levi(const Command& cmd, std::ostream& out) {
  const auto datum =
      harish_chandra_levi(static_cast<int>(cmd.n), static_cast<int>(cmd.e));
  if (cmd.format == OutputFormat::Json) {
    out << harish_chandra_record(datum).dump() << '\n';
    return kExitOk;
  }
  write_table(out, {"n", "e", "k", "GL1 factors", "Sp rank", "relative Weyl"},
              {{std::to_string(datum.n), std::to_string(datum.e),
                std::to_string(datum.k), std::to_string(datum.gl1_factors),
                std::to_string(datum.symplectic_rank),
                "B" + std::to_string(datum.relative_weyl_rank)}});
  return kExitOk;
}

// Weyl ranks are ints; reject anything that would not survive the narrowing
// before it reaches the library's own bound check.
void check_int_range(Integer value, const char* flag) {
  if (value > std::numeric_limits<int>::max()) {
    throw UsageError(std::string(flag) + ": value too large");
  }
}

}  // namespace

Bounds bounds_from_environment() {
  Bounds bounds;
  const char* raw = std::getenv(kRankVariable);
  if (raw == nullptr) return bounds;
  const std::string_view text(raw);
  Integer value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < 0) {
    throw UsageError(std::string(kRankVariable) +
                     ": expected a non-negative integer, got \"" +
                     std::string(text) + "\"");
  }
  bounds.class_bound = value;
  bounds.sweep_bound = value;
  return bounds;
}

Command parse_args(std::span<const std::string> args) {
  Command cmd;
  std::string format = "json";
  std::string bipartition_text;

  CLI::App app{
      "Combinatorics of unipotent classes, symbols and the Springer "
      "correspondence for Sp_2n",
      "springer_kit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  auto* classes = app.add_subcommand("classes", "Unipotent classes of Sp_2n");
  classes->add_option("--n", cmd.n, "Half-rank n")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* springer_cmd =
      app.add_subcommand("springer", "Springer symbol and wave front class");
  springer_cmd
      ->add_option("bipartition", bipartition_text,
                   "Bipartition, e.g. \"[[3,1],[2]]\"")
      ->required();

  auto* cuspidal =
      app.add_subcommand("cuspidal", "Verify n_chi = |A(u)| for one (e, f)");
  cuspidal->add_option("--e", cmd.e, "B-factor parameter, a = e(e+1)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cuspidal->add_option("--f", cmd.f, "D-factor parameter, b = f^2")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand(
      "verify", "Verify n_chi = |A(u)| for all e(e+1) + f^2 <= max-n");
  verify->add_option("--max-n", cmd.max_n, "Largest rank to sweep")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* series =
      app.add_subcommand("series", "Quasi-isolated Lusztig series labels");
  series->add_option("--n", cmd.n, "Rank n")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* levi = app.add_subcommand("levi", "Harish-Chandra Levi shape");
  levi->add_option("--n", cmd.n, "Rank n")
      ->required()
      ->check(CLI::NonNegativeNumber);
  levi->add_option("--e", cmd.e, "Cuspidal parameter, k = e(e+1)")
      ->required()
      ->check(CLI::NonNegativeNumber);

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    Command help;
    help.usage = app.help();
    return help;
  } catch (const CLI::CallForAllHelp&) {
    Command help;
    help.usage = app.help("", CLI::AppFormatMode::All);
    return help;
  } catch (const CLI::ParseError& err) {
    throw UsageError(err.what());
  }

  cmd.format = format == "table" ? OutputFormat::Table : OutputFormat::Json;
  if (*classes) {
    cmd.verb = Verb::Classes;
  } else if (*springer_cmd) {
    cmd.verb = Verb::Springer;
    try {
      cmd.bipartition = parse_bipartition(bipartition_text);
    } catch (const Error& err) {
      throw UsageError(std::string("bipartition: ") + err.what());
    }
  } else if (*cuspidal) {
    cmd.verb = Verb::Cuspidal;
  } else if (*verify) {
    cmd.verb = Verb::Verify;
  } else if (*series) {
    cmd.verb = Verb::Series;
    check_int_range(cmd.n, "--n");
  } else if (*levi) {
    cmd.verb = Verb::Levi;
    check_int_range(cmd.n, "--n");
    check_int_range(cmd.e, "--e");
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err,
        const Bounds& bounds) {
  try {
    switch (cmd.verb) {
      case Verb::Help:
        out << cmd.usage;
        return kExitOk;
      case Verb::Classes:
        return run_classes(cmd, out, bounds);
      case Verb::Springer:
        return run_springer(cmd, out);
      case Verb::Cuspidal:
        return emit_reports({verify_multiplicity_one(cmd.e, cmd.f)}, cmd.format,
                            out);
      case Verb::Verify:
        return emit_reports(sweep(cmd.max_n, bounds.sweep_bound), cmd.format,
                            out);
      case Verb::Series:
        return run_series(cmd, out);
      case Verb::Levi:
        return run_levi(cmd, out);
    }
  } catch (const Error& error) {
    err << error_record(to_string(error.code()), error.what()).dump() << '\n';
    // A wave front outside the distinct-entry rule means the pipeline itself
    // failed to verify.
    const bool verifying =
        cmd.verb == Verb::Verify || cmd.verb == Verb::Cuspidal;
    return verifying && error.code() == ErrorCode::RepeatedEntries
               ? kExitVerificationFailed
               : kExitUsage;
  }
  return kExitUsage;
}

int main_entry(std::span<const std::string> args, std::ostream& out,
               std::ostream& err) {
  try {
    const Command cmd = parse_args(args);
    return run(cmd, out, err, bounds_from_environment());
  } catch (const UsageError& usage) {
    err << error_record("UsageError", usage.what()).dump() << '\n';
    return kExitUsage;
  }
}

}  // namespace springer_kit::cli
