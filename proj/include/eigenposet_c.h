#ifndef EIGENPOSET_C_H
#define EIGENPOSET_C_H

#include <stddef.h>
#include <stdint.h>

#if defined(EPZ_BUILDING_LIBRARY)
#define EPZ_API __attribute__((visibility("default")))
#else
#define EPZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct epz_context epz_context;
typedef struct epz_poset epz_poset;

typedef enum epz_status {
    EPZ_OK = 0,
    EPZ_VERIFICATION_FAILED = 1,
    EPZ_INVALID_ARGUMENT = 2,
    EPZ_BUDGET_EXCEEDED = 3,
    EPZ_INTERNAL_ERROR = 4
} epz_status;

typedef enum epz_poset_kind {
    EPZ_POSET_EIGEN = 0,    /* E(G(m,p,n), zeta_d) */
    EPZ_POSET_BALANCED = 1, /* balanced partitions, n and d */
    EPZ_POSET_DOWLING = 2,  /* Dowling lattice on n letters, weights mod d */
    EPZ_POSET_POINTED = 3   /* pointed d-divisible partitions */
} epz_poset_kind;

typedef struct epz_request {
    const char* command; /* a CLI subcommand name */
    int m, p, n, d;
    int d2;              /* 0 when absent */
    int max_n;
    epz_poset_kind poset;
    const char* format;  /* "text", "json" or "dot"; NULL means text */
} epz_request;

EPZ_API const char* epz_status_string(epz_status status);

EPZ_API epz_status epz_context_create(epz_context** out);
EPZ_API void epz_context_destroy(epz_context* ctx);
EPZ_API epz_status epz_context_set_budget(epz_context* ctx, uint64_t budget);
EPZ_API epz_status epz_context_set_threads(epz_context* ctx, unsigned threads);
/* Message of the last failed call on ctx; empty after a success. */
EPZ_API const char* epz_last_error(const epz_context* ctx);

/* Strings returned through char** are owned by the caller. */
EPZ_API void epz_string_free(char* text);

EPZ_API void epz_request_init(epz_request* request);
/* Output is set even when the status is EPZ_VERIFICATION_FAILED. */
EPZ_API epz_status epz_run(epz_context* ctx, const epz_request* request, char** output);

EPZ_API epz_status epz_poset_build(epz_context* ctx, epz_poset_kind kind, int m, int p, int n, int d, epz_poset** out);
EPZ_API void epz_poset_destroy(epz_poset* poset);
EPZ_API epz_status epz_poset_size(const epz_poset* poset, size_t* out);
/* Reduced Betti numbers of the proper part, one "degree value" pair per nonzero entry. */
EPZ_API epz_status epz_poset_betti(epz_context* ctx, const epz_poset* poset, int64_t* degrees, int64_t* values,
                                   size_t capacity, size_t* count);
/* Computed on the poset with a bottom adjoined when it has none. */
EPZ_API epz_status epz_poset_moebius(epz_context* ctx, const epz_poset* poset, int64_t* out);
EPZ_API epz_status epz_poset_to_json(epz_context* ctx, const epz_poset* poset, char** out);
EPZ_API epz_status epz_poset_to_dot(epz_context* ctx, const epz_poset* poset, char** out);

EPZ_API epz_status epz_sphere_count(epz_context* ctx, int n, int d, int64_t* out);

#ifdef __cplusplus
}
#endif

#endif
