#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catalysis::cli {

enum class OutputFormat { Human, Machine };

/// Exit status contract shared by all commands.
inline constexpr int kExitPositive = 0;  // Exists / AlreadyTransformable / verified / witness found
inline constexpr int kExitNegative = 1;  // NotExists / rejected / no witness
inline constexpr int kExitError = 2;

/// Entries stay as strings until normalization so that "0.4" and "2/5" are
/// parsed by the same exact routine.
struct ProblemInput {
  std::vector<std::string> psi1;
  std::vector<std::string> psi2;
  std::optional<std::vector<std::string>> phi;
  std::size_t k = 2;
  std::size_t grid_denominator = 1000;
  OutputFormat format = OutputFormat::Human;
  bool stats = false;
};

std::vector<std::string> split_list(std::string_view comma_list);

/// Reads a JSON document {"psi1": [...], "psi2": [...], "k": 3, "phi": [...]}
/// whose entries are strings (or integers). Fields present in the document
/// override those in `base`. Throws CatalysisError(Parse).
ProblemInput merge_input_document(std::string_view json_text, ProblemInput base);
ProblemInput merge_input_file(const std::string& path, ProblemInput base);

int cmd_compare(const ProblemInput& input, std::ostream& out, std::ostream& err);
int cmd_find(const ProblemInput& input, std::ostream& out, std::ostream& err);
int cmd_verify(const ProblemInput& input, std::ostream& out, std::ostream& err);
int cmd_oracle(const ProblemInput& input, std::ostream& out, std::ostream& err);

}  // namespace catalysis::cli
