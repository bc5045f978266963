#include "hrt/diagnostics.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace hrt {

Diagnostic make_error(std::string code, std::string message, SourceSpan span) {
  return Diagnostic{std::move(code), Severity::Error, std::move(message),
                    std::move(span)};
}

Diagnostic make_warning(std::string code, std::string message, SourceSpan span) {
  return Diagnostic{std::move(code), Severity::Warning, std::move(message),
                    std::move(span)};
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

std::string format_diagnostics(std::vector<Diagnostic> diags) {
  std::stable_sort(diags.begin(), diags.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::tie(a.span.file, a.span.start.line,
                                     a.span.start.col, a.code) <
                            std::tie(b.span.file, b.span.start.line,
                                     b.span.start.col, b.code);
                   });
  std::ostringstream out;
  for (const auto& d : diags) {
    out << d.span.file << ':' << d.span.start.line << ':' << d.span.start.col
        << ": " << (d.severity == Severity::Error ? "error" : "warning") << '['
        << d.code << "]: " << d.message << '\n';
  }
  return out.str();
}

}  // namespace hrt
