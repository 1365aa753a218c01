#include "eigenposet_c.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "eigenposet/commands.hpp"
#include "eigenposet/ddivisible.hpp"
#include "eigenposet/eigenposet.hpp"
#include "eigenposet/parallel.hpp"
#include "eigenposet/sym_char.hpp"

struct epz_context {
    std::uint64_t budget = eigenposet::default_budget();
    std::string last_error;
};

struct epz_poset {
    eigenposet::PartitionPoset poset;
};

namespace {

char* duplicate(const std::string& text)
{
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <class Body>
epz_status guarded(epz_context* ctx, Body&& body)
{
    if (!ctx) return EPZ_INVALID_ARGUMENT;
    ctx->last_error.clear();
    try {
        return body();
    } catch (const eigenposet::InvalidArgument& e) {
        ctx->last_error = e.what();
        return EPZ_INVALID_ARGUMENT;
    } catch (const eigenposet::BudgetExceeded& e) {
        ctx->last_error = e.what();
        return EPZ_BUDGET_EXCEEDED;
    } catch (const eigenposet::VerificationFailure& e) {
        ctx->last_error = e.what();
        return EPZ_VERIFICATION_FAILED;
    } catch (const eigenposet::PreconditionViolated& e) {
        ctx->last_error = e.what();
        return EPZ_VERIFICATION_FAILED;
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
        return EPZ_BUDGET_EXCEEDED;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return EPZ_INTERNAL_ERROR;
    }
}

const char* kind_name(epz_poset_kind kind)
{
    switch (kind) {
    case EPZ_POSET_EIGEN: return "eigen";
    case EPZ_POSET_BALANCED: return "balanced";
    case EPZ_POSET_DOWLING: return "dowling";
    case EPZ_POSET_POINTED: return "pointed";
    }
    throw eigenposet::InvalidArgument("unknown poset kind");
}

}  // namespace

extern "C" {

const char* epz_status_string(epz_status status)
{
    switch (status) {
    case EPZ_OK: return "ok";
    case EPZ_VERIFICATION_FAILED: return "verification failed";
    case EPZ_INVALID_ARGUMENT: return "invalid argument";
    case EPZ_BUDGET_EXCEEDED: return "budget exceeded";
    case EPZ_INTERNAL_ERROR: return "internal error";
    }
    return "unknown status";
}

epz_status epz_context_create(epz_context** out)
{
    if (!out) return EPZ_INVALID_ARGUMENT;
    try {
        *out = new epz_context;
    } catch (...) {
        *out = nullptr;
        return EPZ_INTERNAL_ERROR;
    }
    return EPZ_OK;
}

void epz_context_destroy(epz_context* ctx) { delete ctx; }

epz_status epz_context_set_budget(epz_context* ctx, uint64_t budget)
{
    return guarded(ctx, [&] {
        eigenposet::require(budget > 0, "budget must be positive");
        ctx->budget = budget;
        return EPZ_OK;
    });
}

epz_status epz_context_set_threads(epz_context* ctx, unsigned threads)
{
    return guarded(ctx, [&] {
        eigenposet::require(threads > 0, "thread count must be positive");
        eigenposet::set_worker_threads(threads);
        return EPZ_OK;
    });
}

const char* epz_last_error(const epz_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void epz_string_free(char* text) { std::free(text); }

void epz_request_init(epz_request* request)
{
    if (!request) return;
    *request = epz_request{};
    request->m = request->p = request->n = request->d = 1;
    request->max_n = 9;
    request->poset = EPZ_POSET_EIGEN;
}

epz_status epz_run(epz_context* ctx, const epz_request* request, char** output)
{
    return guarded(ctx, [&] {
        eigenposet::require(request && request->command && output, "null argument");
        *output = nullptr;
        eigenposet::CommandRequest r;
        r.command = request->command;
        r.m = request->m;
        r.p = request->p;
        r.n = request->n;
        r.d = request->d;
        if (request->d2 != 0) r.d2 = request->d2;
        r.max_n = request->max_n;
        r.poset = kind_name(request->poset);
        if (request->format) r.format = request->format;
        r.budget = ctx->budget;
        const eigenposet::CommandResult result = eigenposet::run_command(r);
        *output = duplicate(result.output);
        if (!*output) throw std::bad_alloc();
        return result.verified ? EPZ_OK : EPZ_VERIFICATION_FAILED;
    });
}

epz_status epz_poset_build(epz_context* ctx, epz_poset_kind kind, int m, int p, int n, int d, epz_poset** out)
{
    return guarded(ctx, [&] {
        eigenposet::require(out != nullptr, "null output");
        *out = nullptr;
        auto handle = std::make_unique<epz_poset>();
        switch (kind) {
        case EPZ_POSET_EIGEN: {
            eigenposet::BuildOptions options;
            options.budget = ctx->budget;
            handle->poset = eigenposet::build_E(eigenposet::GroupParams::make(m, p, n, d), options).poset;
            break;
        }
        case EPZ_POSET_BALANCED: handle->poset = eigenposet::balanced_poset(n, d, ctx->budget); break;
        case EPZ_POSET_DOWLING: handle->poset = eigenposet::dowling_lattice(n, d, ctx->budget); break;
        case EPZ_POSET_POINTED: handle->poset = eigenposet::build_pointed_ddivisible(n, d, ctx->budget).poset; break;
        default: throw eigenposet::InvalidArgument("unknown poset kind");
        }
        *out = handle.release();
        return EPZ_OK;
    });
}

void epz_poset_destroy(epz_poset* poset) { delete poset; }

epz_status epz_poset_size(const epz_poset* poset, size_t* out)
{
    if (!poset || !out) return EPZ_INVALID_ARGUMENT;
    *out = poset->poset.size();
    return EPZ_OK;
}

epz_status epz_poset_betti(epz_context* ctx, const epz_poset* poset, int64_t* degrees, int64_t* values, size_t capacity,
                           size_t* count)
{
    return guarded(ctx, [&] {
        eigenposet::require(poset && count, "null argument");
        const auto betti = eigenposet::betti_reduced(poset->poset.order().without_bounds(), ctx->budget);
        size_t used = 0;
        for (int k = eigenposet::BettiVector::kMinDegree; k <= betti.max_degree(); ++k) {
            if (betti[k] == 0) continue;
            if (used < capacity && degrees && values) {
                degrees[used] = k;
                values[used] = betti[k];
            }
            ++used;
        }
        *count = used;
        return used <= capacity ? EPZ_OK : EPZ_INVALID_ARGUMENT;
    });
}

epz_status epz_poset_moebius(epz_context* ctx, const epz_poset* poset, int64_t* out)
{
    return guarded(ctx, [&] {
        eigenposet::require(poset && out, "null argument");
        const auto& order = poset->poset.order();
        const auto bounded = order.bottom() ? order : order.with_bottom();
        *out = eigenposet::moebius(bounded, *bounded.bottom(), *bounded.top());
        return EPZ_OK;
    });
}

epz_status epz_poset_to_json(epz_context* ctx, const epz_poset* poset, char** out)
{
    return guarded(ctx, [&] {
        eigenposet::require(poset && out, "null argument");
        *out = duplicate(poset->poset.order().to_json());
        return *out ? EPZ_OK : EPZ_INTERNAL_ERROR;
    });
}

epz_status epz_poset_to_dot(epz_context* ctx, const epz_poset* poset, char** out)
{
    return guarded(ctx, [&] {
        eigenposet::require(poset && out, "null argument");
        *out = duplicate(poset->poset.order().to_dot());
        return *out ? EPZ_OK : EPZ_INTERNAL_ERROR;
    });
}

epz_status epz_sphere_count(epz_context* ctx, int n, int d, int64_t* out)
{
    return guarded(ctx, [&] {
        eigenposet::require(out != nullptr, "null output");
        *out = eigenposet::sphere_count(n, d);
        return EPZ_OK;
    });
}

}  // extern "C"
