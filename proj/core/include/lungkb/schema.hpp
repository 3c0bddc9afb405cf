#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lungkb {

enum class ReportKind { clinical, imaging };

std::string to_string(ReportKind kind);
ReportKind report_kind_from_string(const std::string& s);

/// One source document. A corpus is a set of these.
struct ClinicalReport {
    std::string report_id;
    std::string subject_id;
    ReportKind kind = ReportKind::clinical;
    std::string text;
    std::optional<std::string> report_date; // ISO 8601
};

/// One structured lung-lesion finding. Stage 1 fills the primary fields plus
/// the free-text lesion description and its verbatim source span; stage 2
/// fills the description fields (margin, solidity, calcification, cavitation,
/// location description).
struct LesionFinding {
    // Stage-1 primary fields.
    std::optional<std::string> imaging_procedure;
    std::optional<std::string> procedure_date; // ISO 8601
    std::optional<std::string> lung_rads;
    std::optional<std::string> number_of_lesions; // "solitary", "multiple", or a count
    std::vector<double> lesion_size_mm;           // up to 3 dimensions; empty = absent
    std::optional<double> suv;
    std::optional<std::string> lesion_type; // nodule|mass|cyst canonical, else verbatim
    std::optional<std::string> lobe;
    std::optional<std::string> lesion_description;
    std::optional<std::string> text_source;

    // Stage-2 description fields.
    std::optional<std::string> location_description;
    std::optional<std::string> margin;
    std::optional<std::string> solidity;
    std::optional<std::string> calcification;
    std::optional<std::string> cavitation;

    // Annotation-side fields; never extracted, carried through serialization.
    std::optional<std::string> evaluator_signed_on;
    std::optional<std::string> date_of_report_signed;
    std::optional<std::string> lesion_seqno;

    /// Max of the stated dimensions; nullopt when no size was recorded.
    std::optional<double> largest_size_mm() const;
};

struct ControlledVocabulary {
    std::string field_name;
    std::vector<std::string> preferred_terms;
    bool fixed = false; // true = closed set
};

/// The stage-2 vocabularies (margin, solidity, calcification, cavitation).
const std::vector<ControlledVocabulary>& stage2_vocabularies();
const ControlledVocabulary* vocabulary_for(const std::string& field_name);

/// True when the canonical form of `value` is an allowed solidity term.
bool solidity_in_fixed_vocabulary(const std::string& value);

/// Parses a size expression into millimetre values, converting centimetre
/// sources. A unit may be shared across an "x"-separated dimension list
/// ("1.8 x 1.2 cm" -> {18.0, 12.0}). Returns 1-3 values in text order.
/// Throws UnparsableSize when no numeric token with a recognizable unit
/// exists.
std::vector<double> normalize_size(const std::string& raw);

/// Renders millimetre values back to text ("18.0 x 12.0 mm"); the result
/// re-parses to the same values.
std::string render_size_mm(const std::vector<double>& values_mm);

/// Canonical string form used for dedup and evaluation: lower-cased,
/// whitespace-collapsed, hyphen/space vocabulary variants unified
/// ("Ground-Glass" -> "groundglass"), dates rendered ISO 8601. Unknown
/// patterns fall back to the generic normalization.
std::string canonicalize_value(const std::string& field_name, const std::string& raw);

struct Violation {
    std::string field;
    std::string message;
};

/// Empty result iff all type invariants hold.
std::vector<Violation> validate_finding(const LesionFinding& finding);

// --- Serialization -------------------------------------------------------
//
// Findings serialize to line-delimited JSON using the stage-1 and stage-2
// prompt-template key names ("Imaging Procedure", ..., "solidity", ...).
// Absent values serialize as the literal string "None" and deserialize back
// to absent.

std::string finding_to_json_line(const LesionFinding& finding);
LesionFinding finding_from_json_line(const std::string& line); // StructureViolation
std::string findings_to_jsonl(const std::vector<LesionFinding>& findings);
std::vector<LesionFinding> findings_from_jsonl(const std::string& text); // FormatViolation

std::string report_to_json_line(const ClinicalReport& report);
ClinicalReport report_from_json_line(const std::string& line); // StructureViolation

/// Loads a reports corpus (one ClinicalReport JSON object per line), checking
/// report_id uniqueness and non-empty text. Throws FormatViolation with the
/// offending line number.
std::vector<ClinicalReport> load_reports(const std::string& path);

} // namespace lungkb
