// End-to-end acceptance gate: runs every verification criterion and prints
// one pass/fail line per criterion.

#include <cstdio>
#include <cstring>

#include "znt/verify.hpp"

int main(int argc, char** argv) {
    znt::VerifyOptions opts;
    opts.progress = true;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) opts.quick = true;
    znt::VerifyReport rep = znt::run_verification(opts);
    std::fputs(rep.text.c_str(), stdout);
    return rep.all_pass ? 0 : 1;
}
