#include "cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/matrix_io.hpp"
#include "jcf/jcf.hpp"

namespace jcf::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string format;  // empty: by extension
  std::string file;
  std::string file2;
  std::string p_file;
  std::string j_file;
  std::string eigenvalue;
  bool json = false;
  bool witness = false;
  bool check = false;
};

class Context {
 public:
  Context(const Options& opts, std::istream& in) : opts_(opts), in_(in) {}

  Mat load(const std::string& path) const {
    std::string text;
    if (path == "-") {
      std::ostringstream ss;
      ss << in_.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw io::ParseError("cannot open '" + path + "'");
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    bool as_json = std::filesystem::path(path).extension() == ".json";
    if (!opts_.format.empty()) as_json = opts_.format == "json";
    return as_json ? io::parse_matrix_json(text, path).matrix : io::parse_matrix_text(text, path).matrix;
  }

  Mat load_operator(const std::string& path) const {
    Mat m = load(path);
    if (!m.is_square()) {
      throw DimensionMismatch("'" + path + "' is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                              ", expected a square matrix");
    }
    return m;
  }

 private:
  const Options& opts_;
  std::istream& in_;
};

ordered_json matrix_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string size_list(const std::vector<std::size_t>& sizes) {
  std::string s = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s + "]";
}

int cmd_jordan(const Options& opts, const Context& ctx, std::ostream& out) {
  const Mat a = ctx.load_operator(opts.file);
  const auto dec = jordan_form(a);
  if (opts.json) {
    ordered_json doc;
    doc["eigenvalues"] = ordered_json::array();
    for (const auto& eb : dec.spectrum_blocks) {
      doc["eigenvalues"].push_back({{"value", eb.eigenvalue.str()}, {"blocks", eb.sizes}});
    }
    doc["J"] = matrix_json(dec.j);
    doc["P"] = matrix_json(dec.p);
    out << doc.dump() << '\n';
    return kSuccess;
  }
  out << "blocks {";
  for (std::size_t i = 0; i < dec.spectrum_blocks.size(); ++i) {
    const auto& eb = dec.spectrum_blocks[i];
    out << (i ? ", " : "") << eb.eigenvalue << ':' << size_list(eb.sizes);
  }
  out << "}\n";
  out << "J =\n" << to_string(dec.j, "  ");
  out << "P =\n" << to_string(dec.p, "  ");
  return kSuccess;
}

int cmd_blocks(const Options& opts, const Context& ctx, std::ostream& out) {
  const Mat a = ctx.load_operator(opts.file);
  Rational lambda;
  try {
    lambda = Rational::parse(opts.eigenvalue);
  } catch (const InvalidRational& e) {
    throw io::ParseError(std::string("--eigenvalue: ") + e.what());
  }
  const std::size_t mult = root_multiplicity(char_poly(a), lambda);
  if (mult == 0) throw DimensionMismatch(lambda.str() + " is not an eigenvalue (generalized eigenspace is zero)");
  const auto basis = generalized_eigenspace(a, lambda, mult);
  const Mat nil = shift(restrict_to(a, basis), lambda);
  const DSequence d = d_sequence(nil);
  const auto sizes = block_sizes(d);
  if (opts.json) {
    ordered_json doc;
    doc["eigenvalue"] = lambda.str();
    doc["multiplicity"] = mult;
    doc["nilpotency_index"] = d.index_of_nilpotency;
    doc["d"] = d.values;
    doc["blocks"] = sizes;
    out << doc.dump() << '\n';
    return kSuccess;
  }
  out << "eigenvalue " << lambda << " (algebraic multiplicity " << mult << ")\n";
  out << "nilpotency index: " << d.index_of_nilpotency << '\n';
  out << "d-sequence:";
  for (auto v : d.values) out << ' ' << v;
  out << '\n';
  out << "block sizes: " << size_list(sizes) << '\n';
  return kSuccess;
}

int cmd_similar(const Options& opts, const Context& ctx, std::ostream& out) {
  const Mat a = ctx.load_operator(opts.file);
  const Mat b = ctx.load_operator(opts.file2);
  const auto s = similar(a, b);
  if (!s) {
    out << "not similar\n";
    return kNegative;
  }
  out << "similar\n";
  if (opts.witness) out << "S =\n" << to_string(*s, "  ");
  return kSuccess;
}

int cmd_expm(const Options& opts, const Context& ctx, std::ostream& out) {
  const Mat a = ctx.load_operator(opts.file);
  const ExpMatrix e = matrix_exp(a, opts.check);
  if (opts.json) {
    ordered_json terms = ordered_json::array();
    for (const auto& term : e.terms) {
      ordered_json rows = ordered_json::array();
      for (std::size_t r = 0; r < term.coeff.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < term.coeff.cols(); ++c) {
          ordered_json coeffs = ordered_json::array();
          for (const auto& x : term.coeff(r, c).coefficients()) coeffs.push_back(x.str());
          row.push_back(std::move(coeffs));
        }
        rows.push_back(std::move(row));
      }
      terms.push_back({{"eigenvalue", term.eigenvalue.str()}, {"coeff", std::move(rows)}});
    }
    out << ordered_json{{"terms", std::move(terms)}}.dump() << '\n';
    return kSuccess;
  }
  out << to_string(e);
  return kSuccess;
}

int cmd_validate(const Options& opts, const Context& ctx, std::ostream& out) {
  const Mat a = ctx.load_operator(opts.file);
  JordanDecomposition dec;
  dec.p = ctx.load(opts.p_file);
  dec.j = ctx.load(opts.j_file);
  const auto structure = jordan_structure(dec.j);
  if (!structure) {
    out << "invalid: J is not a Jordan matrix in canonical order\n";
    return kNegative;
  }
  dec.spectrum_blocks = *structure;
  if (!validate_decomposition(a, dec)) {
    out << "invalid\n";
    return kNegative;
  }
  out << "valid\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact Jordan canonical form of rational matrices", "jcf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opts.format, "Input format; default is by extension (.json or text)")
      ->check(CLI::IsMember({"text", "json"}));

  auto* jordan = app.add_subcommand("jordan", "Jordan form: block data, J and P with A*P = P*J");
  jordan->add_option("FILE", opts.file, "Matrix file, - for stdin")->required();
  jordan->add_flag("--json", opts.json, "Machine-readable output");

  auto* blocks = app.add_subcommand("blocks", "d-sequence and block sizes at one eigenvalue");
  blocks->add_option("FILE", opts.file, "Matrix file, - for stdin")->required();
  blocks->add_option("--eigenvalue", opts.eigenvalue, "Eigenvalue, e.g. 2 or -1/2")->required();
  blocks->add_flag("--json", opts.json, "Machine-readable output");

  auto* sim = app.add_subcommand("similar", "Decide similarity; exit 1 when not similar");
  sim->add_option("FILE1", opts.file, "First matrix")->required();
  sim->add_option("FILE2", opts.file2, "Second matrix")->required();
  sim->add_flag("--witness", opts.witness, "Print S with S^-1 A S = B");

  auto* expm = app.add_subcommand("expm", "Closed form of exp(tA)");
  expm->add_option("FILE", opts.file, "Matrix file, - for stdin")->required();
  expm->add_flag("--json", opts.json, "Machine-readable output");
  expm->add_flag("--check", opts.check, "Cross-check against the Jordan route");

  auto* val = app.add_subcommand("validate", "Check that A*P = P*J with J a canonical Jordan matrix");
  val->add_option("FILE", opts.file, "Matrix A")->required();
  val->add_option("--p", opts.p_file, "Transition matrix P")->required();
  val->add_option("--j", opts.j_file, "Jordan matrix J")->required();

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  const Context ctx(opts, in);
  std::ostringstream buffer;
  try {
    int code = kSuccess;
    if (*jordan) {
      code = cmd_jordan(opts, ctx, buffer);
    } else if (*blocks) {
      code = cmd_blocks(opts, ctx, buffer);
    } else if (*sim) {
      code = cmd_similar(opts, ctx, buffer);
    } else if (*expm) {
      code = cmd_expm(opts, ctx, buffer);
    } else if (*val) {
      code = cmd_validate(opts, ctx, buffer);
    }
    out << buffer.str();
    return code;
  } catch (const IrrationalSpectrum& e) {
    err << "error: irrational spectrum; residual polynomial: " << e.residual().str() << '\n';
    return kIrrationalSpectrum;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::RaggedRows& e) {
    err << "error: ragged rows: " << e.what() << '\n';
    return kUsage;
  } catch (const io::EmptyInput& e) {
    err << "error: empty input: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kShape;
  }
}

}  // namespace jcf::cli
