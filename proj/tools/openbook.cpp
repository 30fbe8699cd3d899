#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "openbook/openbook.hpp"

namespace {

using namespace openbook;

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string matrix_str(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

std::string spectrum_str(const std::vector<Rat>& spec) {
  std::string s;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (i) s += ", ";
    s += spec[i].get_str();
  }
  return s;
}

struct Flags {
  std::optional<unsigned long> cover;
  bool periodicity = false;
  unsigned long d_max = 64;
  std::string format = "text";
  unsigned long precision_cap = 4096;

  bool machine() const { return format == "machine"; }
};

void periodicity_fields(const PeriodicityReport& rep,
                        const std::function<void(const std::string&, const std::string&)>& put) {
  put("n", std::to_string(rep.n));
  put("mu", std::to_string(rep.mu));
  put("d", rep.d ? std::to_string(*rep.d) : "absent");
  put("parity_case", parity_case_name(rep.parity_case));
  put("homeo_period", rep.homeo_period ? rep.homeo_period->get_str() : "absent");
  put("diffeo_period", rep.diffeo_period ? rep.diffeo_period->get_str() : "absent");
  put("sigma_d", rep.sigma_d ? std::to_string(*rep.sigma_d) : "absent");
  put("sphere_offset", rep.sphere_offset ? rep.sphere_offset->get_str() : "absent");
  put("notes", rep.notes);
}

// Shared report pipeline for the brieskorn and seifert commands; bd is set
// for Brieskorn input and enables the independent lattice signature oracle.
int run_pipeline(const BrieskornData* bd, const SeifertData& sd, const std::string& name,
                 const Flags& f) {
  const mpfr_prec_t cap = (mpfr_prec_t)f.precision_cap;

  if (!is_fibered(sd)) {
    std::cerr << "error: not fibered (det(L) != +-1); reporting the intersection form only\n";
    if (f.machine()) {
      ReportTree t;
      if (!name.empty()) t.add("name", name);
      t.add("n", std::to_string(sd.n));
      t.add("mu", std::to_string(sd.mu()));
      t.add("fibered", "false");
      t.add("intersection_form", matrix_str(intersection_form(sd)));
      std::cout << t.serialize();
    } else {
      if (!name.empty()) std::cout << "name = " << name << "\n";
      std::cout << "n = " << sd.n << "\n";
      std::cout << "mu = " << sd.mu() << "\n";
      std::cout << "fibered = false\n";
      std::cout << "intersection_form = " << matrix_str(intersection_form(sd)) << "\n";
    }
    return 1;
  }

  auto d = min_trivializing_power(sd, f.d_max);
  const std::string d_str = d ? std::to_string(*d) : "absent";

  std::optional<CoverSignature> sigma_tl;
  std::optional<long> sigma_lattice;
  std::optional<AbelianGroup> cover_h;
  if (f.cover) {
    sigma_tl = cover_signature(sd, *f.cover, cap);
    if (bd && *f.cover >= 2) {
      sigma_lattice = cover_signature_lattice(*bd, *f.cover).value;
      if (sigma_tl->meaningful && *sigma_lattice != sigma_tl->value)
        throw OracleMismatch("sigma_" + std::to_string(*f.cover) + ": Tristram-Levine sum " +
                             std::to_string(sigma_tl->value) + " vs lattice count " +
                             std::to_string(*sigma_lattice));
    }
    cover_h = cover_homology(sd, *f.cover).h_n;
  }

  PeriodicityReport rep = detail::analyze_impl(sd, f.d_max, cap, bd);

  const std::string k_str = f.cover ? std::to_string(*f.cover) : "";
  if (f.machine()) {
    ReportTree t;
    if (bd) {
      std::string exps;
      for (std::size_t i = 0; i < bd->exponents.size(); ++i) {
        if (i) exps += " ";
        exps += std::to_string(bd->exponents[i]);
      }
      t.add("exponents", exps);
    }
    if (!name.empty()) t.add("name", name);
    t.add("n", std::to_string(sd.n));
    t.add("mu", std::to_string(sd.mu()));
    t.add("fibered", "true");
    if (bd) t.add("spectrum", spectrum_str(monodromy_spectrum(*bd)));
    t.add("d", d_str);
    if (f.cover) {
      t.add("sigma_" + k_str, std::to_string(sigma_tl->value));
      t.add("sigma_" + k_str + "_meaningful", bool_str(sigma_tl->meaningful));
      if (sigma_lattice) t.add("sigma_" + k_str + "_lattice", std::to_string(*sigma_lattice));
      t.add("H" + std::to_string(sd.n) + "_M" + k_str, cover_h->to_string());
    }
    ReportTree& p = t.add_tree("periodicity");
    periodicity_fields(rep, [&p](const std::string& k, const std::string& v) { p.add(k, v); });
    std::cout << t.serialize();
  } else {
    if (bd) {
      std::cout << "exponents =";
      for (unsigned long a : bd->exponents) std::cout << " " << a;
      std::cout << "\n";
    }
    if (!name.empty()) std::cout << "name = " << name << "\n";
    std::cout << "n = " << sd.n << "\n";
    std::cout << "mu = " << sd.mu() << "\n";
    std::cout << "fibered = true\n";
    if (bd) std::cout << "spectrum = " << spectrum_str(monodromy_spectrum(*bd)) << "\n";
    std::cout << "d = " << d_str << "\n";
    if (f.cover) {
      std::cout << "sigma_" << k_str << " = " << sigma_tl->value;
      if (!sigma_tl->meaningful) std::cout << " (meaningful only when n is odd)";
      std::cout << "\n";
      if (sigma_lattice)
        std::cout << "sigma_" << k_str << " lattice oracle = " << *sigma_lattice << "\n";
      std::cout << "H_" << sd.n << "(M_" << k_str << ") = " << cover_h->to_string() << "\n";
    }
    std::cout << "periodicity:\n";
    periodicity_fields(rep, [](const std::string& k, const std::string& v) {
      std::cout << "  " << k << " = " << v << "\n";
    });
  }
  return 0;
}

int cmd_brieskorn(const std::vector<unsigned long>& exponents, const Flags& f) {
  BrieskornData bd(exponents);
  SeifertData sd = seifert_matrix(bd);
  return run_pipeline(&bd, sd, "", f);
}

int cmd_seifert(const std::string& path, const Flags& f) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open `" << path << "`\n";
    return 1;
  }
  SeifertFile file = parse_seifert_stream(in);
  return run_pipeline(nullptr, file.data, file.name, f);
}

int cmd_groups(unsigned long n, std::size_t mu, const Flags& f) {
  ExtensionDesc ext = kernel_var_structure(n, mu);
  const std::string spi = n >= 3 ? s_pi_n_so_n(n).to_string() : "absent";
  const unsigned long dim = 2 * n + 2;
  auto bp = bp_order(dim);
  const std::string bp_str = bp ? bp->get_str() : "unknown";
  const std::string kernel_value =
      ext.kernel_value ? ext.kernel_value->to_string() : "unknown";
  std::string total;
  if (ext.total) {
    total = ext.total->to_string();
  } else if (ext.quotient.free_rank == 0 && ext.quotient.torsion.empty()) {
    total = ext.kernel_name;
  } else {
    total = "extension of " + ext.quotient.to_string() + " by " + ext.kernel_name;
  }

  if (f.machine()) {
    ReportTree t;
    t.add("n", std::to_string(n));
    t.add("mu", std::to_string(mu));
    t.add("s_pi_n_so_n", spi);
    t.add("hom_part", ext.quotient.to_string());
    t.add("bp_dim", std::to_string(dim));
    t.add("bp_order", bp_str);
    t.add("kernel", ext.kernel_name);
    t.add("kernel_value", kernel_value);
    t.add("quotient", ext.quotient.to_string());
    t.add("split", split_name(ext.split));
    t.add("note", ext.note);
    t.add("K_V", total);
    std::cout << t.serialize();
  } else {
    std::cout << "n = " << n << "\n";
    std::cout << "mu = " << mu << "\n";
    std::cout << "S pi_n(SO(n)) = " << spi << "\n";
    std::cout << "Hom part = " << ext.quotient.to_string() << "\n";
    std::cout << "bP_" << dim << " order = " << bp_str << "\n";
    std::cout << "kernel = " << ext.kernel_name;
    if (ext.kernel_value) std::cout << " (" << kernel_value << ")";
    std::cout << "\n";
    std::cout << "split = " << split_name(ext.split) << "\n";
    std::cout << "note = " << ext.note << "\n";
    std::cout << "K(V) = " << total << "\n";
  }
  return 0;
}

int cmd_trefoil(const Flags& f) {
  TrefoilReport rep = trefoil_report((mpfr_prec_t)f.precision_cap);
  if (f.machine()) {
    ReportTree t;
    t.add("seifert_matrix", matrix_str(trefoil_seifert().L));
    t.add("n", "1");
    t.add("d", std::to_string(rep.d));
    t.add("sigma_N7", std::to_string(rep.sigma_N7));
    t.add("rokhlin_multiple_of_16", bool_str(rep.rokhlin_passes));
    for (std::size_t i = 0; i < rep.H1_Mk.size(); ++i)
      t.add("H1_M" + std::to_string(i + 1), rep.H1_Mk[i].to_string());
    for (std::size_t i = 0; i < rep.ab_pi1_Mk.size(); ++i)
      t.add("ab_pi1_M" + std::to_string(i + 1), rep.ab_pi1_Mk[i].to_string());
    for (const auto& [r, status] : rep.triangle)
      t.add("triangle_2_3_" + std::to_string(r), triangle_status_name(status));
    t.add("conclusion", rep.conclusion);
    std::cout << t.serialize();
  } else {
    std::cout << "Seifert matrix = " << matrix_str(trefoil_seifert().L) << "\n";
    std::cout << "n = 1\n";
    std::cout << "d = " << rep.d << "\n";
    std::cout << "sigma_N7 = " << rep.sigma_N7
              << " (Tristram-Levine sum and lattice count agree)\n";
    if (rep.rokhlin_passes)
      std::cout << "Rokhlin: passes (sigma = " << rep.sigma_N7 << " ≡ 0 mod 16)\n";
    else
      std::cout << "Rokhlin: fails (sigma = " << rep.sigma_N7 << ", not ≡ 0 mod 16)\n";
    for (std::size_t i = 0; i < rep.H1_Mk.size(); ++i)
      std::cout << "H_1(M_" << i + 1 << ") = " << rep.H1_Mk[i].to_string()
                << "  [ab pi_1(M_" << i + 1 << ") = " << rep.ab_pi1_Mk[i].to_string() << "]\n";
    for (const auto& [r, status] : rep.triangle)
      std::cout << "triangle group (2,3," << r << ") = " << triangle_status_name(status)
                << "\n";
    std::cout << "conclusion: " << rep.conclusion << "\n";
  }
  return 0;
}

void add_common(CLI::App* cmd, Flags& f, unsigned long* cover_val) {
  cmd->add_option("--d-max", f.d_max, "search bound for the trivializing power d")
      ->default_val(64);
  cmd->add_option("--format", f.format, "output format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "machine"}));
  cmd->add_option("--precision-cap", f.precision_cap,
                  "bit limit for certified sign evaluation")
      ->default_val(4096);
  if (cover_val) {
    auto* cover =
        cmd->add_option("--cover,--k", *cover_val, "report sigma_k and H_n(M_k) for this cover")
            ->check([](const std::string& s) -> std::string {
              return (s.empty() || s == "0" || s[0] == '-') ? "cover index must be >= 1" : "";
            });
    cmd->add_flag("--periodicity", f.periodicity, "include the periodicity report");
    cmd->parse_complete_callback([cover, cover_val, &f] {
      if (cover->count()) f.cover = *cover_val;
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of simple open books and their branched cyclic covers"};
  app.require_subcommand(1);

  Flags flags;
  std::vector<unsigned long> exponents;
  std::string input_path;
  unsigned long groups_n = 0;
  std::size_t groups_mu = 1;
  unsigned long cover_val = 0;

  CLI::App* brieskorn = app.add_subcommand("brieskorn", "analyze a Brieskorn-Pham singularity");
  brieskorn->add_option("exponents", exponents, "exponents a_0 a_1 ... (each >= 2)")
      ->required()
      ->expected(-1);
  add_common(brieskorn, flags, &cover_val);

  CLI::App* seifert = app.add_subcommand("seifert", "analyze a Seifert matrix file");
  seifert->add_option("input", input_path, "input file: `n = <int>`, then matrix rows")
      ->required();
  add_common(seifert, flags, &cover_val);

  CLI::App* groups = app.add_subcommand("groups", "group tables and the K(V) extension");
  groups->add_option("--n", groups_n, "middle dimension n (>= 2)")->required();
  groups->add_option("--mu", groups_mu, "rank of H_n(F, dF)")->default_val(1);
  add_common(groups, flags, nullptr);

  CLI::App* trefoil = app.add_subcommand("trefoil", "the dimension-3 trefoil analysis");
  add_common(trefoil, flags, nullptr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (brieskorn->parsed()) return cmd_brieskorn(exponents, flags);
    if (seifert->parsed()) return cmd_seifert(input_path, flags);
    if (groups->parsed()) return cmd_groups(groups_n, groups_mu, flags);
    return cmd_trefoil(flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
