#include "nsg/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "nsg/errors.hpp"

namespace nsg::kernels {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double sum_sq_diff(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - y[i];
        acc += d * d;
    }
    return acc;
}

double sum_sq_diff_const(const double* x, std::size_t n, double v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - v;
        acc += d * d;
    }
    return acc;
}

void plane_rotation(double* x, double* y, std::size_t n, double c, double s) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

}  // namespace scalar

#if defined(NSG_HAVE_AVX2)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
double sum_sq_diff(const double* x, const double* y, std::size_t n);
double sum_sq_diff_const(const double* x, std::size_t n, double v);
void plane_rotation(double* x, double* y, std::size_t n, double c, double s);
bool cpu_supported();
}  // namespace avx2
#endif

namespace {

struct Table {
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum_sq_diff)(const double*, const double*, std::size_t);
    double (*sum_sq_diff_const)(const double*, std::size_t, double);
    void (*plane_rotation)(double*, double*, std::size_t, double, double);
    Backend backend;
};

constexpr Table kScalarTable{scalar::dot, scalar::sum_sq_diff, scalar::sum_sq_diff_const,
                             scalar::plane_rotation, Backend::scalar};

#if defined(NSG_HAVE_AVX2)
constexpr Table kAvx2Table{avx2::dot, avx2::sum_sq_diff, avx2::sum_sq_diff_const,
                           avx2::plane_rotation, Backend::avx2};
#endif

const Table* table_for(Backend b) {
#if defined(NSG_HAVE_AVX2)
    if (b == Backend::avx2) return &kAvx2Table;
#endif
    (void)b;
    return &kScalarTable;
}

Backend detect() {
    Backend best = Backend::scalar;
    if (supports(Backend::avx2)) best = Backend::avx2;
    if (const char* env = std::getenv("NSG_KERNELS")) {
        const std::string_view choice(env);
        if (choice == "scalar") return Backend::scalar;
        if (choice == "avx2" && supports(Backend::avx2)) return Backend::avx2;
    }
    return best;
}

std::atomic<const Table*> g_table{nullptr};

const Table& table() {
    const Table* t = g_table.load(std::memory_order_acquire);
    if (!t) {
        t = table_for(detect());
        g_table.store(t, std::memory_order_release);
    }
    return *t;
}

}  // namespace

bool supports(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(NSG_HAVE_AVX2)
            return avx2::cpu_supported();
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return table().backend; }

void set_backend(Backend b) {
    if (!supports(b))
        throw Error(std::string("kernel backend '") + std::string(backend_name(b)) +
                    "' is not available on this machine");
    g_table.store(table_for(b), std::memory_order_release);
}

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

double dot(const double* x, const double* y, std::size_t n) { return table().dot(x, y, n); }

double sum_sq_diff(const double* x, const double* y, std::size_t n) {
    return table().sum_sq_diff(x, y, n);
}

double sum_sq_diff_const(const double* x, std::size_t n, double v) {
    return table().sum_sq_diff_const(x, n, v);
}

void plane_rotation(double* x, double* y, std::size_t n, double c, double s) {
    table().plane_rotation(x, y, n, c, s);
}

}  // namespace nsg::kernels
