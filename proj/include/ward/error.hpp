#ifndef WARD_ERROR_HPP
#define WARD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ward
{

enum class errc {
    division_by_zero,
    variant_mismatch,
    index_out_of_bound,
    k_out_of_range,
    kernel_undefined,
    bound_exceeded,
    context_mismatch,
    bad_indices,
    order_zero,
    non_invertible,
    flavor_mismatch,
    bad_spec,
    parse_error,
};

inline constexpr std::string_view errc_name(errc c) noexcept
{
    switch (c) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::variant_mismatch: return "VariantMismatch";
        case errc::index_out_of_bound: return "IndexOutOfBound";
        case errc::k_out_of_range: return "KOutOfRange";
        case errc::kernel_undefined: return "KernelUndefined";
        case errc::bound_exceeded: return "BoundExceeded";
        case errc::context_mismatch: return "ContextMismatch";
        case errc::bad_indices: return "BadIndices";
        case errc::order_zero: return "OrderZero";
        case errc::non_invertible: return "NonInvertible";
        case errc::flavor_mismatch: return "FlavorMismatch";
        case errc::bad_spec: return "BadSpec";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

// Every failure raised by the library carries one of the codes above; the
// message is prefixed with the code name so CLI output stays greppable.
class error : public std::runtime_error
{
public:
    error(errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept
    {
        return code_;
    }

private:
    errc code_;
};

} // namespace ward

#endif
