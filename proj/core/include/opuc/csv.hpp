#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace opuc {

/// %.17g with a lowercase exponent: enough digits to round-trip a double,
/// so identical runs produce byte-identical files.
std::string format_sig17(double x);

/// Minimal CSV assembly: a header row then data rows, comma-joined.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    const std::string& text() const { return text_; }

  private:
    std::string text_;
    size_t columns_ = 0;
};

/// Writes via a temporary file and rename, so readers never observe a
/// partially written file.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace opuc
