#pragma once

#include <stdexcept>
#include <string>

namespace jcphase {

// Failure kinds surfaced to callers. The CLI maps these to exit code 3 and
// prints one machine-parsable line ("error: <kind>: <detail>") on stderr.
enum class ErrorKind {
    NonSquare,
    NonHermitianInput,
    DimensionMismatch,
    InvalidDensityMatrix,
    CutoffTooSmall,
    SectorOutOfRange,
    DegenerateSector,
    GapCollapse,
    NonClosedLoop,
    RankChange,
    LoopTooCoarse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define JCPHASE_DEFINE_ERROR(Name)                     \
    struct Name final : Error {                        \
        explicit Name(const std::string& detail)       \
            : Error(ErrorKind::Name, detail) {}        \
    }

JCPHASE_DEFINE_ERROR(NonSquare);
JCPHASE_DEFINE_ERROR(NonHermitianInput);
JCPHASE_DEFINE_ERROR(DimensionMismatch);
JCPHASE_DEFINE_ERROR(InvalidDensityMatrix);
JCPHASE_DEFINE_ERROR(CutoffTooSmall);
JCPHASE_DEFINE_ERROR(SectorOutOfRange);
JCPHASE_DEFINE_ERROR(DegenerateSector);
JCPHASE_DEFINE_ERROR(GapCollapse);
JCPHASE_DEFINE_ERROR(NonClosedLoop);
JCPHASE_DEFINE_ERROR(RankChange);
JCPHASE_DEFINE_ERROR(LoopTooCoarse);

#undef JCPHASE_DEFINE_ERROR

} // namespace jcphase
