// Command-line front end: polytopes, transfer maps, omega matrices,
// valuations, verification runs, and the Sp4 classification table.
// Exit codes: 0 pass, 1 check failure, 2 usage error.

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "chainorder/no_body.hpp"
#include "chainorder/rep_basis.hpp"
#include "chainorder/serialize.hpp"

using namespace chainorder;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int64_t> parse_lambda(const std::string& s) {
  std::vector<int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

std::vector<int> parse_order(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<Rat> parse_point(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
  return out;
}

int coordinate_count(TypeTag type, int n) {
  return type == TypeTag::A ? n * (n + 1) / 2 : n * n;
}

Partition parse_partition(const std::string& mask, TypeTag type, int n) {
  Partition p = Partition::from_bitmask(mask);
  if (p.size() != coordinate_count(type, n))
    throw UsageError("partition bitmask length must be " +
                     std::to_string(coordinate_count(type, n)));
  return p;
}

std::vector<Partition> all_partitions(int len) {
  std::vector<Partition> out;
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::string bits;
    for (int i = 0; i < len; ++i) bits.push_back((mask >> i) & 1 ? '1' : '0');
    out.push_back(Partition::from_bitmask(bits));
  }
  return out;
}

Json valvec_json(const ValVec& v) { return Json(v); }

struct CommonOpts {
  std::string type = "A";
  int n = 2;
  std::string lambda;
  std::string partition;
  bool all_parts = false;
  int level = 1;       // valuation level
  int sat_kmax = 3;    // saturation levels
  int high_kmax = 2;   // highest-term levels
  int jobs = 1;
  int table_jobs = 0;  // 0 = hardware concurrency
  bool json_out = false;
  bool markdown_out = false;
  bool ambient = false;
  std::string order;
  std::string point;
};

int cmd_polytope(const CommonOpts& o) {
  TypeTag type = type_from_string(o.type);
  DominantWeight lam(type, o.n, parse_lambda(o.lambda));
  MarkedPoset poset = gt_poset(type, o.n, lam);
  Partition part = parse_partition(o.partition, type, o.n);
  HPolytope h = mco_hrep(poset, part);
  Json j;
  j["poset"] = to_json(poset);
  j["partition"] = part.to_bitmask();
  j["hrep"] = to_json(h);
  j["vertices"] = to_json(vertices(h));
  j["lattice_points"] = to_json(mco_lattice_points(poset, part));
  Json images = Json::array();
  for (const ValVec& p : order_polytope_lattice_points(poset).points) {
    std::vector<Rat> x(p.begin(), p.end());
    std::vector<Rat> y = transfer(poset, part, x);
    Json row;
    row["from"] = valvec_json(p);
    Json to = Json::array();
    for (const Rat& c : y) to.push_back(rat_to_string(c));
    row["to"] = to;
    images.push_back(row);
  }
  j["transfer"] = images;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_transfer(const CommonOpts& o) {
  TypeTag type = type_from_string(o.type);
  DominantWeight lam(type, o.n, parse_lambda(o.lambda));
  MarkedPoset poset = gt_poset(type, o.n, lam);
  Partition part = parse_partition(o.partition, type, o.n);
  std::vector<Rat> x = parse_point(o.point);
  if (static_cast<int>(x.size()) != poset.num_unmarked())
    throw UsageError("point must have " + std::to_string(poset.num_unmarked()) +
                     " coordinates");
  std::vector<Rat> y = transfer(poset, part, x);
  Json j;
  Json from = Json::array(), to = Json::array();
  for (const Rat& c : x) from.push_back(rat_to_string(c));
  for (const Rat& c : y) to.push_back(rat_to_string(c));
  j["from"] = from;
  j["to"] = to;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_omega(const CommonOpts& o) {
  TypeTag type = type_from_string(o.type);
  Partition part = parse_partition(o.partition, type, o.n);
  PolyMatrix om = omega_product(type, o.n, part);
  if (o.markdown_out) {
    std::cout << om.to_string();
  } else {
    Json j;
    j["type"] = to_string(type);
    j["n"] = o.n;
    j["partition"] = part.to_bitmask();
    j["omega"] = to_json(om);
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_valuation(const CommonOpts& o, const std::string& mode) {
  TypeTag type = type_from_string(o.type);
  Partition part = parse_partition(o.partition, type, o.n);
  int nn = part.size();
  VarOrder ord = o.order.empty() ? VarOrder::identity(nn)
                                 : VarOrder::from_one_based(parse_order(o.order));
  if (ord.size() != nn) throw UsageError("order must be a permutation of 1.." + std::to_string(nn));
  SectionSpace space = level_space(type, o.n, parse_lambda(o.lambda), part, o.level);
  ValMode vm = mode == "high" ? ValMode::High : ValMode::Low;
  std::set<ValVec> values = level_value_set(space, ord, vm);
  Json j;
  j["type"] = to_string(type);
  j["n"] = o.n;
  j["lambda"] = parse_lambda(o.lambda);
  j["partition"] = part.to_bitmask();
  j["level"] = o.level;
  j["mode"] = mode;
  j["dim"] = space.expected_dim;
  Json pts = Json::array();
  for (const ValVec& v : values) pts.push_back(valvec_json(o.ambient ? permute_to_ambient(v, ord) : v));
  j["reported_order"] = o.ambient ? "ambient" : "lex";
  j["values"] = pts;
  std::cout << j.dump(2) << "\n";
  return 0;
}

void run_cells(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min<int>(jobs, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Partition> partitions_for(const CommonOpts& o, TypeTag type) {
  int nn = coordinate_count(type, o.n);
  if (o.all_parts) return all_partitions(nn);
  if (o.partition.empty()) throw UsageError("pass --partition or --all-partitions");
  return {parse_partition(o.partition, type, o.n)};
}

int cmd_verify_main_thm(const CommonOpts& o) {
  auto parts = partitions_for(o, TypeTag::A);
  std::vector<int64_t> lam = parse_lambda(o.lambda);
  std::vector<Json> results(parts.size());
  std::vector<char> ok(parts.size(), 0);
  run_cells(parts.size(), o.jobs, [&](std::size_t i) {
    MainTheoremReport rep = verify_main_theorem(o.n, parts[i], lam);
    Json r;
    r["partition"] = parts[i].to_bitmask();
    r["pass"] = rep.pass;
    r["points_match"] = rep.points_match;
    r["hull_match"] = rep.hull_match;
    r["matched"] = rep.matched;
    if (!rep.points_match) {
      Json a = Json::array(), b = Json::array();
      for (const ValVec& v : rep.only_value_set) a.push_back(valvec_json(v));
      for (const ValVec& v : rep.only_polytope) b.push_back(valvec_json(v));
      r["only_value_set"] = a;
      r["only_polytope"] = b;
    }
    results[i] = std::move(r);
    ok[i] = rep.pass;
  });
  bool pass = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  Json j;
  j["check"] = "main-thm";
  j["n"] = o.n;
  j["lambda"] = lam;
  j["pass"] = pass;
  j["results"] = results;
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_verify_saturation(const CommonOpts& o) {
  auto parts = partitions_for(o, TypeTag::A);
  std::vector<int64_t> lam = parse_lambda(o.lambda);
  std::vector<Json> results(parts.size());
  std::vector<char> ok(parts.size(), 0);
  run_cells(parts.size(), o.jobs, [&](std::size_t i) {
    SaturationReport rep = saturation_check(o.n, parts[i], lam, o.sat_kmax);
    Json r;
    r["partition"] = parts[i].to_bitmask();
    r["pass"] = rep.pass;
    r["level_counts"] = rep.level_counts;
    if (!rep.pass) r["first_failing_level"] = rep.first_failing_level;
    results[i] = std::move(r);
    ok[i] = rep.pass;
  });
  bool pass = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  Json j;
  j["check"] = "saturation";
  j["n"] = o.n;
  j["lambda"] = lam;
  j["kmax"] = o.sat_kmax;
  j["pass"] = pass;
  j["results"] = results;
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_verify_lemma63(const CommonOpts& o) {
  auto parts = partitions_for(o, TypeTag::A);
  int nn = coordinate_count(TypeTag::A, o.n);
  VarOrder id = VarOrder::identity(nn);
  std::vector<Json> results(parts.size());
  std::vector<char> ok(parts.size(), 0);
  run_cells(parts.size(), o.jobs, [&](std::size_t i) {
    PolyMatrix om = omega_product(TypeTag::A, o.n, parts[i]);
    std::size_t checks = 0, agreed = 0;
    for (int k = 1; k <= o.n; ++k)
      for (const Column& b : crystal_elements(o.n, k)) {
        ++checks;
        if (comb_valuation(o.n, k, b, parts[i]).value ==
            low_val(fundamental_section(o.n, k, b, om), id))
          ++agreed;
      }
    Json r;
    r["partition"] = parts[i].to_bitmask();
    r["checks"] = checks;
    r["agreed"] = agreed;
    r["pass"] = checks == agreed;
    results[i] = std::move(r);
    ok[i] = checks == agreed;
  });
  bool pass = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  Json j;
  j["check"] = "lemma63";
  j["n"] = o.n;
  j["pass"] = pass;
  j["results"] = results;
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_verify_basis(const CommonOpts& o) {
  auto parts = partitions_for(o, TypeTag::A);
  std::vector<int64_t> lam = parse_lambda(o.lambda);
  int64_t expected = static_cast<int64_t>(
      order_polytope_lattice_points(gt_poset(TypeTag::A, o.n, DominantWeight(TypeTag::A, o.n, lam)))
          .points.size());
  std::vector<Json> results(parts.size());
  std::vector<char> ok(parts.size(), 0);
  run_cells(parts.size(), o.jobs, [&](std::size_t i) {
    auto vecs = basis_vectors(o.n, lam, parts[i]);
    int64_t r = rank_check(vecs);
    Json rr;
    rr["partition"] = parts[i].to_bitmask();
    rr["vectors"] = vecs.size();
    rr["rank"] = r;
    rr["expected"] = expected;
    rr["pass"] = r == expected && static_cast<int64_t>(vecs.size()) == expected;
    results[i] = std::move(rr);
    ok[i] = r == expected && static_cast<int64_t>(vecs.size()) == expected;
  });
  bool pass = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  Json j;
  j["check"] = "basis";
  j["n"] = o.n;
  j["lambda"] = lam;
  j["pass"] = pass;
  j["results"] = results;
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_verify_highest(const CommonOpts& o) {
  auto parts = partitions_for(o, TypeTag::A);
  std::vector<int64_t> lam = parse_lambda(o.lambda);
  VPolytope gt_ref = vertices(mco_hrep(
      gt_poset(TypeTag::A, o.n, DominantWeight(TypeTag::A, o.n, lam)),
      Partition::all_order(coordinate_count(TypeTag::A, o.n))));
  std::vector<Json> results(parts.size());
  std::vector<char> ok(parts.size(), 0);
  run_cells(parts.size(), o.jobs, [&](std::size_t i) {
    HighestBodyResult hb = highest_body(o.n, parts[i], lam, o.high_kmax);
    int level = o.high_kmax;
    if (!hb.stabilized && o.high_kmax == 2) {  // escalate once and report
      hb = highest_body(o.n, parts[i], lam, 3);
      level = 3;
    }
    bool equiv = hb.stabilized && is_integral(hb.scaled_hull) &&
                 unimodular_equiv(hb.scaled_hull, gt_ref).has_value();
    Json r;
    r["partition"] = parts[i].to_bitmask();
    r["stabilized"] = hb.stabilized;
    r["level"] = level;
    r["gt_equivalent"] = equiv;
    r["pass"] = equiv;
    results[i] = std::move(r);
    ok[i] = equiv;
  });
  bool pass = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  Json j;
  j["check"] = "highest";
  j["n"] = o.n;
  j["lambda"] = lam;
  j["pass"] = pass;
  j["results"] = results;
  std::cout << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_table1(const CommonOpts& o) {
  int jobs = o.table_jobs > 0 ? o.table_jobs
                                              : static_cast<int>(std::thread::hardware_concurrency());
  Table1Result res = compute_table1(std::max(1, jobs));
  auto perms = s4_permutations();
  if (!o.json_out) {
    std::cout << "| lexicographic order | (C1,O1) | (C2,O2) | (C3,O3) |\n";
    std::cout << "|---|---|---|---|\n";
    for (std::size_t r = 0; r < perms.size(); ++r) {
      std::cout << "| t" << perms[r][0] << " > t" << perms[r][1] << " > t" << perms[r][2]
                << " > t" << perms[r][3] << " |";
      for (int c = 0; c < 3; ++c) std::cout << " " << to_string(res.computed(r, c)) << " |";
      std::cout << "\n";
    }
    std::cout << (res.pass ? "table matches the published classification (72/72)\n"
                           : "TABLE MISMATCH\n");
  }
  if (o.json_out || !o.markdown_out) {
    Json j;
    j["check"] = "table1";
    j["pass"] = res.pass;
    Json cells = Json::array();
    for (std::size_t r = 0; r < perms.size(); ++r)
      for (int c = 0; c < 3; ++c) {
        const TypeCCell& cell = res.cells[r][c];
        Json one;
        one["cell"] = {{"partition", c + 1}, {"order", perms[r]}};
        one["label"] = json_label(cell.label);
        one["volume"] = rat_to_string(cell.hull_volume);
        Json pts = Json::array();
        for (const ValVec& p : cell.points) pts.push_back(valvec_json(p));
        one["points"] = pts;
        one["expected"] = json_label(res.expected[r][c]);
        one["match"] = cell.label == res.expected[r][c];
        cells.push_back(one);
      }
    j["cells"] = cells;
    std::cout << j.dump(2) << "\n";
  }
  if (!res.pass) {
    for (std::size_t r : res.mismatched_rows)
      std::cerr << "mismatch in row " << r + 1 << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"marked chain-order polytopes as Newton-Okounkov bodies: exact verification"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_common = [&](CLI::App* sub, bool needs_lambda, bool needs_part) {
    sub->add_option("-t,--type", o.type, "type tag: A or C");
    sub->add_option("-n", o.n, "rank")->required();
    auto* l = sub->add_option("-l,--lambda", o.lambda, "dominant weight, comma separated");
    if (needs_lambda) l->required();
    sub->add_option("-p,--partition", o.partition, "chain bitmask over q_1..q_N");
    if (needs_part) sub->get_option("--partition")->required();
  };

  auto* polytope = app.add_subcommand("polytope", "H-rep, vertices, lattice points, transfer");
  add_common(polytope, true, true);

  auto* transfer_cmd = app.add_subcommand("transfer", "apply the transfer map to a point");
  add_common(transfer_cmd, true, true);
  transfer_cmd->add_option("--point", o.point, "comma separated rationals")->required();

  auto* omega = app.add_subcommand("omega", "the matrix Omega_{C,O}(t_1..t_N)");
  add_common(omega, false, true);
  omega->add_flag("--markdown", o.markdown_out, "pretty print instead of JSON");

  auto* valuation = app.add_subcommand("valuation", "level-k value set of a section space");
  add_common(valuation, true, true);
  std::string mode = "low";
  valuation->add_option("-o,--order", o.order, "lex order as comma separated variable indices");
  valuation->add_option("-k,--level", o.level, "level");
  valuation->add_option("--mode", mode, "low or high")->check(CLI::IsMember({"low", "high"}));
  valuation->add_flag("--ambient", o.ambient, "report vectors in ambient t-index order");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  auto add_verify_common = [&](CLI::App* sub, bool needs_lambda) {
    sub->add_option("-n", o.n, "rank")->required();
    auto* l = sub->add_option("-l,--lambda", o.lambda, "dominant weight");
    if (needs_lambda) l->required();
    sub->add_option("-p,--partition", o.partition, "chain bitmask");
    sub->add_flag("--all-partitions", o.all_parts, "run every partition");
    sub->add_option("--jobs", o.jobs, "worker threads");
  };
  auto* v_main = verify->add_subcommand("main-thm", "level-1 value set vs the chain-order polytope");
  add_verify_common(v_main, true);
  auto* v_sat = verify->add_subcommand("saturation", "level-k value sets vs dilated polytopes");
  add_verify_common(v_sat, true);
  v_sat->add_option("-k,--level", o.sat_kmax, "kmax");
  auto* v_l63 = verify->add_subcommand("lemma63", "combinatorial valuation vs minor valuation");
  add_verify_common(v_l63, false);
  auto* v_basis = verify->add_subcommand("basis", "rank of the lattice-point-indexed vectors");
  add_verify_common(v_basis, true);
  auto* v_high = verify->add_subcommand("highest", "scaled highest-term hulls vs GT");
  add_verify_common(v_high, true);
  v_high->add_option("-k,--level", o.high_kmax, "kmax");

  auto* table1 = app.add_subcommand("table1", "reproduce the Sp4 classification table");
  table1->add_option("--jobs", o.table_jobs, "worker threads (default: all cores)");
  table1->add_flag("--json", o.json_out, "JSON only");
  table1->add_flag("--markdown", o.markdown_out, "Markdown only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (polytope->parsed()) return cmd_polytope(o);
    if (transfer_cmd->parsed()) return cmd_transfer(o);
    if (omega->parsed()) return cmd_omega(o);
    if (valuation->parsed()) return cmd_valuation(o, mode);
    if (verify->parsed()) {
      if (v_main->parsed()) return cmd_verify_main_thm(o);
      if (v_sat->parsed()) return cmd_verify_saturation(o);
      if (v_l63->parsed()) return cmd_verify_lemma63(o);
      if (v_basis->parsed()) return cmd_verify_basis(o);
      if (v_high->parsed()) return cmd_verify_highest(o);
    }
    if (table1->parsed()) return cmd_table1(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
