// Command-line driver for the kernel.
//
// Exit codes: 0 success/valid/true, 1 invalid/false, 2 parse or usage
// error, 3 fuel exhausted, 4 precondition failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambdadelta/lambdadelta.hpp"

namespace {

enum Exit { kOk = 0, kNo = 1, kParse = 2, kFuel = 3, kPrecondition = 4 };

struct Options {
  std::string input;
  std::string file;
  std::string domain = "omega";
  std::size_t fuel = 0;
  std::string sorts = "succ";

  std::size_t steps = 1;
  bool list = false;
  std::size_t rt_bound = 0;
  std::string against;
  std::string bounds = "0,0";
  std::string with;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::size_t> parse_numbers(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw UsageError("not a natural number: '" + item + "'");
    }
  }
  return out;
}

ld::ApplicabilityDomain parse_domain(const std::string& spec) {
  if (spec == "omega") return ld::ApplicabilityDomain::omega();
  if (spec == "empty") return ld::ApplicabilityDomain::empty();
  if (spec.rfind("set:", 0) == 0) return ld::ApplicabilityDomain::finite(parse_numbers(spec.substr(4)));
  throw UsageError("unknown domain '" + spec + "' (expected omega, empty or set:N,...)");
}

ld::SortPolicy parse_sorts(const std::string& spec) {
  if (spec == "succ") return ld::SortPolicy::successor();
  if (spec.rfind("table:", 0) != 0) throw UsageError("unknown sort policy '" + spec + "'");
  const std::string path = spec.substr(6);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read sort table '" + path + "'");
  std::map<ld::SortId, ld::SortId> table;
  std::string line;
  while (std::getline(in, line)) {
    if (auto c = line.find('%'); c != std::string::npos) line.erase(c);
    std::istringstream ls(line);
    ld::SortId s = 0, t = 0;
    if (!(ls >> s)) continue;
    if (!(ls >> t)) throw UsageError("malformed sort table line: '" + line + "'");
    table[s] = t;
  }
  return ld::SortPolicy(std::move(table));
}

std::string read_input(const Options& o) {
  if (!o.input.empty()) return o.input;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot read '" + o.file + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

void print_term(const ld::Closure& c, const ld::Term& t) {
  std::cout << "term: " << ld::print_term(t, c.env.size()) << "\n";
}

int print_verdict(const ld::ValidityReport& r) {
  if (r.valid) {
    std::cout << "verdict: valid\n";
    return kOk;
  }
  std::cout << "verdict: invalid (" << ld::failure_name(r.failure->tag) << ")\n";
  if (!r.failure->path.empty() || r.failure->root_cause != r.failure->tag) {
    std::cout << "cause: " << ld::failure_name(r.failure->root_cause);
    for (const auto& p : r.failure->path) std::cout << " / " << p;
    std::cout << "\n";
  }
  return kNo;
}

int run(const std::string& command, const Options& o) {
  const ld::NamedClosure parsed = ld::parse_named_closure(read_input(o));
  const ld::Closure& c = parsed.closure;
  const ld::Environment& L = c.env;
  const ld::Term& T = c.subject;
  const ld::SortPolicy sorts = parse_sorts(o.sorts);
  const ld::ApplicabilityDomain A = parse_domain(o.domain);
  const ld::CheckOptions opts{o.fuel, sorts};
  const std::size_t fuel = o.fuel ? o.fuel : ld::default_fuel(L, T);

  if (command == "parse") {
    std::cout << "closure: " << ld::print_closure(c) << "\n";
    return kOk;
  }
  if (command == "reduce") {
    if (o.list) {
      for (const auto& s : ld::step_rt(L, T, sorts)) {
        std::cout << "step: " << s.bound.value << " " << ld::rule_name(s.rule);
        for (auto ctx : s.path) std::cout << " " << ld::context_name(ctx);
        std::cout << " -> " << ld::print_term(s.result, L.size()) << "\n";
      }
      return kOk;
    }
    ld::Term cur = T;
    std::size_t done = 0;
    for (; done < o.steps; ++done) {
      auto next = ld::first_r_step(L, cur);
      if (!next) break;
      cur = std::move(*next);
    }
    std::cout << "steps: " << done << "\n";
    print_term(c, cur);
    return kOk;
  }
  if (command == "whnf") {
    const auto w = ld::whnf_rt(L, T, fuel);
    std::cout << "bound: " << w.t_steps.value << "\n";
    print_term(c, w.form);
    return kOk;
  }
  if (command == "nf") {
    print_term(c, ld::rt_normal_form(L, T, o.rt_bound, fuel, sorts));
    return kOk;
  }
  if (command == "arity") {
    const auto a = ld::infer_arity(L, T);
    std::cout << "arity: " << (a ? a->to_string() : "none") << "\n";
    return a ? kOk : kNo;
  }
  if (command == "check") return print_verdict(ld::check_valid(A, L, T, opts));
  if (command == "type") {
    const auto r = ld::check_valid(A, L, T, opts);
    if (!r.valid) return print_verdict(r);
    print_term(c, ld::infer_type(A, L, T, opts));
    return kOk;
  }
  if (command == "typecheck") {
    if (o.against.empty()) throw UsageError("typecheck needs --against TYPE");
    const ld::Term U = ld::parse_term(o.against, parsed.names);
    return print_verdict(ld::check_valid(A, L, ld::Term::cast(U, T), opts));
  }
  if (command == "convert") {
    if (o.with.empty()) throw UsageError("convert needs --with TERM");
    const auto bounds = parse_numbers(o.bounds);
    if (bounds.size() != 2) throw UsageError("--bounds expects two numbers, e.g. 0,1");
    const ld::Term U = ld::parse_term(o.with, parsed.names);
    const std::size_t f = o.fuel ? o.fuel : std::max(fuel, ld::default_fuel(L, U));
    const bool yes = ld::rt_convertible(L, T, bounds[0], U, bounds[1], f, sorts);
    std::cout << "verdict: " << (yes ? "true" : "false") << "\n";
    return yes ? kOk : kNo;
  }
  if (command == "eta") {
    std::cout << "closure: " << ld::print_closure(ld::eta_expand_closure(c, o.fuel)) << "\n";
    return kOk;
  }
  throw UsageError("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel for the lambda-delta calculus: reduction, arity and validity checking."};
  app.set_config("--config", "", "Read options from a key=value file");
  app.require_subcommand(1);

  Options o;
  app.add_option("--domain", o.domain, "Applicability domain: omega | empty | set:N,...")->capture_default_str();
  app.add_option("--fuel", o.fuel, "Step budget per kernel call (0 = 10*size^2)")->capture_default_str();
  app.add_option("--sorts", o.sorts, "Sort successor: succ | table:FILE")->capture_default_str();

  auto input = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("closure", o.input, "Closure text (default: --file or stdin)");
    sub->add_option("--file", o.file, "Read the closure from a file");
  };

  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    input(s);
    subs.emplace_back(name, s);
    return s;
  };
  add("parse", "Parse and print the closure");
  auto* reduce = add("reduce", "Take leftmost-outermost r-steps");
  reduce->add_option("--steps", o.steps, "Maximum number of steps")->capture_default_str();
  reduce->add_flag("--list", o.list, "List every single bound rt-step instead");
  add("whnf", "Weak head rt-normal form with the least bound");
  add("nf", "Full r-normal form of the iterated type")->add_option("--rt-bound", o.rt_bound, "Bound n")->capture_default_str();
  add("arity", "Infer the arity");
  add("check", "Decide validity");
  add("type", "Infer the canonical type of a valid term");
  add("typecheck", "Check the subject against a type")->add_option("--against", o.against, "The type")->required();
  auto* convert = add("convert", "Decide rt-conversion");
  convert->add_option("--bounds", o.bounds, "Bounds n1,n2")->capture_default_str();
  convert->add_option("--with", o.with, "The second term")->required();
  add("eta", "Eta-expand declared variables of the closure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  std::string command;
  for (const auto& [name, s] : subs)
    if (s->parsed()) command = name;

  try {
    return run(command, o);
  } catch (const ld::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kParse;
  } catch (const ld::FuelExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFuel;
  } catch (const ld::KernelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
}
