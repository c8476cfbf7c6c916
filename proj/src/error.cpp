#include "textchi/error.hpp"

namespace textchi {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::EmptyDocument: return "EmptyDocument";
    case ErrorCode::InvalidEncoding: return "InvalidEncoding";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooFewWords: return "TooFewWords";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::FragmentTooLong: return "FragmentTooLong";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

} // namespace textchi
