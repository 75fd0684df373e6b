#pragma once

#include <stdexcept>

namespace ccral {

// Base class for every library error; subclasses name the violated contract.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CCRAL_DEFINE_ERROR(NAME) \
    struct NAME : Error {        \
        using Error::Error;      \
    };

// tabular_data
CCRAL_DEFINE_ERROR(FileUnreadable)
CCRAL_DEFINE_ERROR(HeaderMismatch)
CCRAL_DEFINE_ERROR(EmptyTable)
CCRAL_DEFINE_ERROR(ConstantTreatment)
CCRAL_DEFINE_ERROR(UnknownKind)
CCRAL_DEFINE_ERROR(LayoutMismatch)
CCRAL_DEFINE_ERROR(InfeasibleSplit)

// linear_classifier
CCRAL_DEFINE_ERROR(SingleClassTraining)
CCRAL_DEFINE_ERROR(DivergedLoss)
CCRAL_DEFINE_ERROR(DimensionMismatch)

// counterfactual_engine
CCRAL_DEFINE_ERROR(NonBinaryTreatmentValue)
CCRAL_DEFINE_ERROR(MatchingInfeasible)

// ccral_trainer
CCRAL_DEFINE_ERROR(AlphaOutOfRange)

// metrics
CCRAL_DEFINE_ERROR(LengthMismatch)
CCRAL_DEFINE_ERROR(EmptyInput)
CCRAL_DEFINE_ERROR(SingleClassInput)

// experiment
CCRAL_DEFINE_ERROR(MalformedReport)
CCRAL_DEFINE_ERROR(BadConfig)

#undef CCRAL_DEFINE_ERROR

}  // namespace ccral
