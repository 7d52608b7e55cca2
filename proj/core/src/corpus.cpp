#include "vtm/corpus.hpp"

#include <array>

#include "vtm/merge.hpp"
#include "vtm/parse.hpp"

namespace vtm {

namespace {

constexpr std::string_view kProvenance =
    "Bundled voting-system trust corpus. Matrix rows that the source table "
    "merges across machinery variants are expanded to both variants. "
    "Curation remarks: note 11 mentions the software vendor, but in the "
    "cryptographic-paper ballot-secrecy row only the printing-house cell "
    "carries it; the corpus encodes exactly the table's cells. The two "
    "cryptographic systems are both described as having the largest "
    "ballot-secrecy assumption count although their totals differ (6 vs 8); "
    "per-system totals follow the matrix.";

}  // namespace

TrustModel load_builtin_corpus() {
  const std::array<SourceFile, 2> files = {
      SourceFile{"corpus/table1.vtm", std::string(builtin_table_text())},
      SourceFile{"corpus/notes.vtm", std::string(builtin_notes_text())},
  };

  ParseResult table = parse_model(files[0].text, files[0].name);
  ParseResult notes = parse_model(files[1].text, files[1].name);
  if (!table.ok() || !notes.ok()) {
    throw CorpusError("bundled corpus data is corrupted:\n" +
                      render_diagnostics(table.diagnostics) +
                      render_diagnostics(notes.diagnostics));
  }

  const std::array<TrustModel, 2> models = {std::move(*table.model),
                                            std::move(*notes.model)};
  ParseResult merged = merge_models(models);
  if (!merged.ok()) {
    throw CorpusError("bundled corpus files do not merge:\n" +
                      render_diagnostics(merged.diagnostics));
  }

  return merged.model->with_provenance(std::string(kProvenance));
}

}  // namespace vtm
