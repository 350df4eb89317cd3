#pragma once

#include <stdexcept>
#include <string>

namespace wbr {

// Base for all typed errors raised by the library. CLI maps subclasses
// to exit codes (parse -> 4, hypothesis violation -> 2, ambiguity -> 3).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define WBR_DEFINE_ERROR(NAME)                                   \
    struct NAME : Error {                                        \
        explicit NAME(const std::string& msg) : Error(msg) {}    \
    }

WBR_DEFINE_ERROR(ParseError);
WBR_DEFINE_ERROR(FieldMismatch);
WBR_DEFINE_ERROR(DivisionByZero);
WBR_DEFINE_ERROR(NonPrimeCharacteristic);
WBR_DEFINE_ERROR(DeltaNotInField);
WBR_DEFINE_ERROR(SizeMismatch);
WBR_DEFINE_ERROR(DegreeMismatch);
WBR_DEFINE_ERROR(DegreeTooLarge);
WBR_DEFINE_ERROR(NotASubgroupElement);
WBR_DEFINE_ERROR(MalformedPartialDiagram);
WBR_DEFINE_ERROR(AlgebraMismatch);
WBR_DEFINE_ERROR(DimensionTooLarge);
WBR_DEFINE_ERROR(ShapeMismatch);
WBR_DEFINE_ERROR(IndexAcrossWall);
WBR_DEFINE_ERROR(IndexOutOfRange);
WBR_DEFINE_ERROR(NotCellularlyStratified);
WBR_DEFINE_ERROR(LayerOutOfRange);
WBR_DEFINE_ERROR(NotPRegular);
WBR_DEFINE_ERROR(BadCharacteristic);
WBR_DEFINE_ERROR(NonSplitField);
WBR_DEFINE_ERROR(LabelAmbiguous);
WBR_DEFINE_ERROR(NotInvariant);
WBR_DEFINE_ERROR(ActionsIncompatible);
WBR_DEFINE_ERROR(UnknownSuite);
WBR_DEFINE_ERROR(InternalError);

#undef WBR_DEFINE_ERROR

}  // namespace wbr
