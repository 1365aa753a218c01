#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "eigenposet_c.h"

namespace {

int failures = 0;

void check(bool ok, const char* what)
{
    if (!ok) {
        std::printf("FAILED: %s\n", what);
        ++failures;
    }
}

std::string fixture(const char* name)
{
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

int main()
{
    epz_context* ctx = nullptr;
    check(epz_context_create(&ctx) == EPZ_OK && ctx, "context create");

    epz_request r;
    epz_request_init(&r);
    r.command = "table3";
    char* out = nullptr;
    check(epz_run(ctx, &r, &out) == EPZ_OK, "table3 runs");
    check(out && fixture("table3.txt") == out, "table3 matches fixture");
    epz_string_free(out);

    epz_request_init(&r);
    r.command = "build";
    r.m = 3;
    r.p = 2;
    r.n = 2;
    r.d = 2;
    check(epz_run(ctx, &r, &out) == EPZ_INVALID_ARGUMENT, "p must divide m");
    check(std::strlen(epz_last_error(ctx)) > 0, "error message set");
    check(std::strcmp(epz_status_string(EPZ_BUDGET_EXCEEDED), "budget exceeded") == 0, "status strings");

    check(epz_context_set_budget(ctx, 0) == EPZ_INVALID_ARGUMENT, "zero budget rejected");
    check(epz_context_set_budget(ctx, 50) == EPZ_OK, "small budget");
    epz_poset* poset = nullptr;
    check(epz_poset_build(ctx, EPZ_POSET_DOWLING, 1, 1, 5, 3, &poset) == EPZ_BUDGET_EXCEEDED, "budget enforced");
    check(epz_context_set_budget(ctx, 1000000) == EPZ_OK, "restore budget");
    check(epz_context_set_threads(ctx, 2) == EPZ_OK, "threads");

    check(epz_poset_build(ctx, EPZ_POSET_BALANCED, 1, 1, 5, 2, &poset) == EPZ_OK && poset, "balanced build");
    size_t size = 0;
    check(epz_poset_size(poset, &size) == EPZ_OK && size == 41, "balanced size");
    int64_t degrees[4], values[4];
    size_t count = 0;
    check(epz_poset_betti(ctx, poset, degrees, values, 4, &count) == EPZ_OK, "betti");
    check(count == 1 && degrees[0] == 1 && values[0] == 21, "betti values");
    char* json = nullptr;
    check(epz_poset_to_json(ctx, poset, &json) == EPZ_OK && std::strstr(json, "\"covers\""), "json export");
    epz_string_free(json);
    epz_poset_destroy(poset);

    check(epz_poset_build(ctx, EPZ_POSET_EIGEN, 1, 1, 4, 2, &poset) == EPZ_OK, "eigen build");
    int64_t mu = 0;
    check(epz_poset_moebius(ctx, poset, &mu) == EPZ_OK, "moebius");
    char* dot = nullptr;
    check(epz_poset_to_dot(ctx, poset, &dot) == EPZ_OK && std::strncmp(dot, "digraph", 7) == 0, "dot export");
    epz_string_free(dot);
    epz_poset_destroy(poset);

    int64_t spheres = 0;
    check(epz_sphere_count(ctx, 9, 3, &spheres) == EPZ_OK && spheres == 32367, "sphere count");
    check(epz_sphere_count(ctx, 3, 1, &spheres) == EPZ_INVALID_ARGUMENT, "sphere count precondition");
    check(epz_run(nullptr, &r, &out) == EPZ_INVALID_ARGUMENT, "null context");

    epz_context_destroy(ctx);
    if (failures == 0) std::printf("all C API checks passed\n");
    return failures == 0 ? 0 : 1;
}
