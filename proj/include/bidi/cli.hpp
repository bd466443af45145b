// Copyright 2026 The bidi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIDI_CLI_HPP
#define BIDI_CLI_HPP

// Command dispatch for the `bidi` tool. Exit codes: 0 when the property
// holds or the transformation succeeded, 1 when the property fails (a
// witness is printed), 2 on usage or input errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bidi/balance.hpp"
#include "bidi/convert.hpp"
#include "bidi/io.hpp"
#include "bidi/oracle.hpp"
#include "bidi/uniform.hpp"

namespace bidi {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline BidirectedGraph as_bidirected(const Document& d, const char* command) {
  if (const auto* b = std::get_if<BidirectedGraph>(&d.payload)) return *b;
  if (const auto* l = std::get_if<Di2SignedGraph>(&d.payload)) return di2_to_bidirected(*l);
  throw UsageError(std::string(command) + " expects a bidirected or di2 graph, got " +
                   to_string(d.kind()));
}

inline const SignedGraph& as_signed(const Document& d, const char* command) {
  if (const auto* s = std::get_if<SignedGraph>(&d.payload)) return *s;
  throw UsageError(std::string(command) + " expects a signed graph, got " + to_string(d.kind()) +
                   " (use convert --to signed or --to induced)");
}

inline Document convert_document(const Document& d, const std::string& target) {
  if (const auto* s = std::get_if<SignedGraph>(&d.payload)) {
    if (target == "signed") return {*s};
    throw UsageError("a signed graph cannot be converted to " + target);
  }
  if (const auto* dn = std::get_if<DnSignedGraph>(&d.payload); dn && dn->n() != 2) {
    throw UsageError("convert needs n = 2, got dn with n = " + std::to_string(dn->n()));
  }
  BidirectedGraph b;
  if (const auto* dn = std::get_if<DnSignedGraph>(&d.payload)) {
    b = decompose_dn(*dn).bidirections.front();
  } else {
    b = as_bidirected(d, "convert");
  }
  if (target == "bidirected") return {b};
  if (target == "di2") return {bidirected_to_di2(b)};
  if (target == "signed") return {associated_signed(b)};
  return {induced_signed(bidirected_to_di2(b))};
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"Bidirected, directionally signed and signed graphs", "bidi"};
  app.require_subcommand(1);

  std::string input = "-";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Graph file ('-' or omitted: standard input)");
  };

  std::string target;
  auto* convert = app.add_subcommand("convert", "Convert between graph kinds");
  convert->add_option("--to", target, "Target kind")
      ->required()
      ->check(CLI::IsMember({"signed", "bidirected", "di2", "induced"}));
  add_input(convert);

  auto* balance = app.add_subcommand("check-balance", "Decide balance of a signed graph");
  add_input(balance);
  auto* antibalance = app.add_subcommand("check-antibalance", "Decide antibalance of a signed graph");
  add_input(antibalance);
  auto* uniformize_cmd =
      app.add_subcommand("uniformize", "Reorient a bidirected graph so every vertex is a source or sink");
  add_input(uniformize_cmd);
  auto* decompose = app.add_subcommand("decompose", "Split a dn graph into bidirections and a center");
  add_input(decompose);
  auto* compose = app.add_subcommand("compose", "Rebuild a dn graph from its decomposition");
  add_input(compose);
  auto* dot = app.add_subcommand("export-dot", "Write Graphviz DOT");
  add_input(dot);

  std::string certificate_path;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate printed by a verdict command");
  verify->add_option("--certificate", certificate_path, "Certificate file")->required();
  add_input(verify);

  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool loops = false;
  bool parallel = false;
  std::uint64_t seed = 0;
  auto* random = app.add_subcommand("random", "Generate a seeded random bidirected graph");
  random->add_option("--vertices", vertices, "Vertex count")->required();
  random->add_option("--edges", edges, "Edge count")->required();
  random->add_flag("--loops", loops, "Allow loops");
  random->add_flag("--parallel", parallel, "Allow parallel edges");
  random->add_option("--seed", seed, "Seed")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (random->parsed()) {
      out << serialize(Document{oracle::random_bidirected(vertices, edges, loops, parallel, seed)});
      return kExitHolds;
    }
    if (compose->parsed()) {
      out << serialize(Document{compose_dn(parse_decomposition(detail::read_input(input, in)))});
      return kExitHolds;
    }

    const Document doc = parse(detail::read_input(input, in));

    if (convert->parsed()) {
      out << serialize(detail::convert_document(doc, target));
      return kExitHolds;
    }
    if (balance->parsed() || antibalance->parsed()) {
      const bool anti = antibalance->parsed();
      const SignedGraph& s = detail::as_signed(doc, anti ? "check-antibalance" : "check-balance");
      const BalanceResult r = anti ? is_antibalanced(s) : is_balanced(s);
      out << format_balance(s, r, anti ? SignatureMode::Antibalance : SignatureMode::Balance);
      return holds(r) ? kExitHolds : kExitFails;
    }
    if (uniformize_cmd->parsed()) {
      const BidirectedGraph b = detail::as_bidirected(doc, "uniformize");
      const UniformizationResult r = uniformize(b);
      out << format_uniformization(b, r);
      return holds(r) ? kExitHolds : kExitFails;
    }
    if (decompose->parsed()) {
      DnSignedGraph dn;
      if (const auto* x = std::get_if<DnSignedGraph>(&doc.payload)) {
        dn = *x;
      } else if (const auto* l = std::get_if<Di2SignedGraph>(&doc.payload)) {
        dn = compose_dn(DnDecomposition{{di2_to_bidirected(*l)}, std::nullopt});
      } else {
        throw detail::UsageError("decompose expects a dn or di2 graph, got " +
                                 std::string(to_string(doc.kind())));
      }
      out << serialize_decomposition(decompose_dn(dn));
      return kExitHolds;
    }
    if (dot->parsed()) {
      out << export_dot(doc);
      return kExitHolds;
    }
    if (verify->parsed()) {
      const Certificate c = parse_certificate(detail::read_input(certificate_path, in));
      bool ok = false;
      if (doc.kind() == DocumentKind::Signed) {
        ok = check_certificate(c, std::get<SignedGraph>(doc.payload));
      } else {
        const BidirectedGraph b = detail::as_bidirected(doc, "verify");
        ok = check_certificate(c, associated_signed(b), &b);
      }
      out << (ok ? "valid\n" : "invalid\n");
      return ok ? kExitHolds : kExitFails;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bidi

#endif  // BIDI_CLI_HPP
