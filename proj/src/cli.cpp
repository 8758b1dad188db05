#include "seifert/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "seifert/action.hpp"
#include "seifert/obstruction.hpp"
#include "seifert/orbifold.hpp"
#include "seifert/presentation.hpp"
#include "seifert/structure.hpp"
#include "seifert/torus.hpp"

namespace seifert::cli {

namespace {

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_integer(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// "1,2;3" -> {{0,1},{2}}
SlotPartition parse_partition(const std::string& text) {
  SlotPartition out;
  std::size_t start = 0;
  while (true) {
    auto semi = text.find(';', start);
    std::vector<std::size_t> cls;
    for (const auto& v : parse_integer_list(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start))) {
      if (v < 1) throw ParseError("slot numbers start at 1");
      cls.push_back(static_cast<std::size_t>(v) - 1);
    }
    out.push_back(std::move(cls));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::size_t to_index(const Integer& v, std::size_t bound, const char* what) {
  if (v < 0 || v >= bound) throw DomainError(std::string(what) + " " + v.str() + " out of range");
  return static_cast<std::size_t>(v);
}

struct Options {
  std::string pres, pres2, pair, orbifold, action_file;
  std::string b, order, orbits, h, partition, regular_orbits;
  std::size_t regular_slots = 0;
  long long element = 0;
  long long component = 1;
  bool geometry = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seifert fibered space invariants and finite fiber-preserving actions", "seifert"};
  app.set_version_flag("--version", std::string("seifert ") + kVersion);
  app.require_subcommand(1);
  bool no_color = false;
  app.add_flag("--no-color", no_color, "Disable colored output (output is never colored)");

  Options o;
  std::function<int()> action;

  auto* validate_cmd = app.add_subcommand("validate", "Check a presentation for coprimality and positivity");
  validate_cmd->add_option("presentation", o.pres, "e.g. \"(0, o1 | (3,2))\"")->required();
  validate_cmd->callback([&] {
    action = [&] {
      auto violations = validate(parse_presentation(o.pres));
      if (violations.empty()) {
        out << "ok\n";
        return kExitOk;
      }
      for (const auto& v : violations) err << v.message << "\n";
      return kExitInputError;
    };
  });

  auto* normalize_cmd = app.add_subcommand("normalize", "Print the normalized presentation");
  normalize_cmd->add_option("presentation", o.pres)->required();
  normalize_cmd->callback([&] {
    action = [&] {
      out << format(normalize(parse_presentation(o.pres))) << "\n";
      return kExitOk;
    };
  });

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide fiber-preserving equivalence");
  equiv_cmd->add_option("first", o.pres)->required();
  equiv_cmd->add_option("second", o.pres2)->required();
  equiv_cmd->callback([&] {
    action = [&] {
      bool same = equivalent(parse_presentation(o.pres), parse_presentation(o.pres2));
      out << (same ? "equivalent" : "not equivalent") << "\n";
      return same ? kExitOk : kExitNegative;
    };
  });

  auto* euler_cmd = app.add_subcommand("euler", "Euler number of the Seifert bundle");
  euler_cmd->add_option("presentation", o.pres)->required();
  euler_cmd->callback([&] {
    action = [&] {
      out << euler_number(parse_presentation(o.pres)) << "\n";
      return kExitOk;
    };
  });

  auto* glue_cmd = app.add_subcommand("glue-pair", "Gluing exponents (x, y) of a Seifert pair");
  glue_cmd->add_option("pair", o.pair, "e.g. \"(3,2)\"")->required();
  glue_cmd->callback([&] {
    action = [&] {
      auto gp = gluing_pair(parse_pair(o.pair));
      auto fib = induced_fibration(gp);
      out << "x=" << gp.x << " y=" << gp.y << " fibration=(" << fib.first << "," << fib.second << ")\n";
      return kExitOk;
    };
  });

  auto* chi_cmd = app.add_subcommand("orbifold-chi", "Orbifold Euler characteristic");
  chi_cmd->add_option("orbifold", o.orbifold, "e.g. \"genus:0 cone:(2,3) corner:()\"")->required();
  chi_cmd->add_flag("--geometry", o.geometry, "Also print the geometry type");
  chi_cmd->callback([&] {
    action = [&] {
      auto orb = parse_orbifold(o.orbifold);
      out << euler_characteristic(orb) << "\n";
      if (o.geometry) out << to_string(geometry_sign(orb)) << "\n";
      return kExitOk;
    };
  });

  auto* orbit_cmd = app.add_subcommand("orbit-numbers", "Possible orbit numbers for a quotient orbifold");
  orbit_cmd->add_option("orbifold", o.orbifold)->required();
  orbit_cmd->add_option("--order", o.order, "Order of the effective group acting on the base")->required();
  orbit_cmd->callback([&] {
    action = [&] {
      auto nums = possible_orbit_numbers(parse_integer(o.order), parse_orbifold(o.orbifold));
      bool first = true;
      for (const auto& v : nums) {
        out << (first ? "" : " ") << v;
        first = false;
      }
      out << "\n";
      return kExitOk;
    };
  });

  auto* check_cmd = app.add_subcommand("check-obstruction", "Decide the obstruction condition");
  check_cmd->add_option("orbifold", o.orbifold, "Quotient orbifold of the base action");
  check_cmd->add_option("--b", o.b, "Obstruction class");
  check_cmd->add_option("--order", o.order, "Order of the effective group acting on the base");
  check_cmd->add_option("--action", o.action_file, "Action file (alternative to quotient data)");
  check_cmd->add_option("--pres", o.pres, "Presentation the action lives on (with --action)");
  check_cmd->add_option("--regular-orbits", o.regular_orbits, "Extra orbit numbers of regular fibers, e.g. 6,12");
  check_cmd->callback([&] {
    action = [&] {
      if (!o.action_file.empty()) {
        if (o.pres.empty()) throw ParseError("--action requires --pres");
        auto data = read_action_file(o.action_file);
        require_action(data);
        auto np = normalize(parse_presentation(o.pres));
        std::vector<Integer> extra;
        if (!o.regular_orbits.empty()) extra = parse_integer_list(o.regular_orbits);
        auto w = action_obstruction_check(data, np, extra);
        if (!w) {
          out << "not satisfied\n";
          return kExitNegative;
        }
        out << "satisfied\n" << format(np.b, *w) << "\n";
        return kExitOk;
      }
      if (o.orbifold.empty() || o.b.empty() || o.order.empty())
        throw ParseError("check-obstruction needs ORBIFOLD --b --order, or --action --pres");
      Integer b = parse_integer(o.b), n = parse_integer(o.order);
      auto orb = parse_orbifold(o.orbifold);
      Integer divisor = obstruction_divisor(n, orb);
      if (!satisfies_obstruction_divisibility(b, n, orb)) {
        out << "not satisfied\ndivisor: " << divisor << "\n";
        return kExitNegative;
      }
      auto nums = possible_orbit_numbers(n, orb);
      std::vector<Integer> list(nums.begin(), nums.end());
      out << "satisfied\ndivisor: " << divisor << "\n" << format(b, *decompose(b, list)) << "\n";
      return kExitOk;
    };
  });

  auto* decompose_cmd = app.add_subcommand("decompose", "Write b as a combination of orbit numbers");
  decompose_cmd->add_option("--b", o.b)->required();
  decompose_cmd->add_option("--orbits", o.orbits, "Comma separated, e.g. 2,3")->required();
  decompose_cmd->callback([&] {
    action = [&] {
      Integer b = parse_integer(o.b);
      auto w = decompose(b, parse_integer_list(o.orbits));
      if (!w) {
        out << "impossible\n";
        return kExitNegative;
      }
      out << format(b, *w) << "\n";
      return kExitOk;
    };
  });

  auto* rewrite_cmd = app.add_subcommand("rewrite", "Redistribute the obstruction class with an h-function");
  rewrite_cmd->set_help_flag("--help", "Print this help message and exit");
  rewrite_cmd->add_option("presentation", o.pres)->required();
  rewrite_cmd->add_option("--h", o.h, "Values on critical slots then regular slots, e.g. 1,1")->required();
  rewrite_cmd->add_option("--regular", o.regular_slots, "Number of regular-fiber slots");
  rewrite_cmd->add_option("--partition", o.partition, "Orbit classes of slots, e.g. \"1,2;3\"");
  rewrite_cmd->callback([&] {
    action = [&] {
      auto np = normalize(parse_presentation(o.pres));
      SlotAssignment slots{o.regular_slots, std::nullopt};
      if (!o.partition.empty()) slots.orbits = parse_partition(o.partition);
      out << format(rewrite_presentation(np, HFunction{parse_integer_list(o.h)}, slots)) << "\n";
      return kExitOk;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify-action", "Check the action conditions on an action file");
  verify_cmd->add_option("action", o.action_file)->required();
  verify_cmd->callback([&] {
    action = [&] {
      auto violations = verify_action(read_action_file(o.action_file));
      if (violations.empty()) {
        out << "ok\n";
        return kExitOk;
      }
      for (const auto& v : violations) out << "violated: " << to_string(v.condition) << " " << v.detail << "\n";
      return kExitNegative;
    };
  });

  auto add_boundary_verb = [&](const char* name, const char* help, auto fn) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("action", o.action_file)->required();
    cmd->add_option("--element", o.element, "Group element index")->required();
    cmd->add_option("--component", o.component, "Boundary component, starting at 1")->required();
    cmd->callback([&, fn] {
      action = [&, fn] {
        auto data = read_action_file(o.action_file);
        require_action(data);
        auto g = to_index(o.element, data.group.order(), "element");
        auto i = to_index(o.component - 1, data.n_boundary(), "component index");
        BoundaryImage img = fn(data, g, i);
        out << "target: " << img.target + 1 << "\nmap: " << format(img.map) << "\n";
        return kExitOk;
      };
    });
  };
  add_boundary_verb("boundary-action", "Action of an element on a boundary torus of the product part",
                    [](const ExtendedActionData& d, Element g, std::size_t i) { return boundary_action(d, g, i); });
  add_boundary_verb("filling-action", "Induced action on the boundary of a filling solid torus",
                    [](const ExtendedActionData& d, Element g, std::size_t i) {
                      return induced_filling_action(d, g, i);
                    });

  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit sizes of boundary components");
  orbits_cmd->add_option("action", o.action_file)->required();
  orbits_cmd->callback([&] {
    action = [&] {
      auto data = read_action_file(o.action_file);
      require_action(data);
      auto nums = boundary_orbit_numbers(data);
      for (std::size_t i = 0; i < nums.size(); ++i) out << i + 1 << ": " << nums[i] << "\n";
      return kExitOk;
    };
  });

  auto* structure_cmd = app.add_subcommand("structure", "Group structure report for an action");
  structure_cmd->add_option("action", o.action_file)->required();
  structure_cmd->callback([&] {
    action = [&] {
      auto data = read_action_file(o.action_file);
      require_action(data);
      out << format(structure_report(data), data.group.order());
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return action ? action() : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace seifert::cli
