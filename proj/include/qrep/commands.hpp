#pragma once

// The qrep subcommands as plain functions from file contents to output text and
// an exit code, so that golden tests need neither a process nor a filesystem.
//
// JSON reports share a top-level shape:
//   { "command": ..., "quiver": <name>, "field": "Q" | "F<p>" | null,
//     "result": { ... }, "version": ... }
// Keys are emitted in sorted order; field elements are strings ("a/b").

#include <cstdint>
#include <optional>
#include <string>

namespace qrep {

inline constexpr const char* qrep_version = "0.1.0";

enum class OutputFormat { table, json };
enum class IndecMethod { reflection, generic };

struct CommandInput {
  std::string name;  ///< used in diagnostics (usually the path)
  std::string text;
};

struct CommandOptions {
  OutputFormat format = OutputFormat::table;
  std::uint64_t seed = 0;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit 0 for finite type, 2 for infinite type.
CommandResult cmd_classify(const CommandInput& quiver, const CommandOptions& opts);
/// Sorted positive roots and their count.
CommandResult cmd_roots(const CommandInput& quiver, const CommandOptions& opts);
/// Emits a representation file for the indecomposable of dimension `dim`
/// (after checking that it re-parses to itself, is Schur and has no self-extensions).
CommandResult cmd_indec(const CommandInput& quiver, const std::string& dim, const std::string& field,
                        IndecMethod method, const CommandOptions& opts);
/// dim Hom, dim Ext^1 and the Euler form; the Euler identity is checked before printing.
CommandResult cmd_ext(const CommandInput& quiver, const CommandInput& from, const CommandInput& to,
                      const CommandOptions& opts);
/// Universal deformation ring verdict for every indecomposable (or the one of dimension `dim`).
CommandResult cmd_verify_udr(const CommandInput& quiver, const std::string& field,
                             const std::optional<std::string>& dim, const CommandOptions& opts);
/// Universal deformation ring verdict for an arbitrary representation file.
CommandResult cmd_udr(const CommandInput& quiver, const CommandInput& rep, const CommandOptions& opts);

}  // namespace qrep
