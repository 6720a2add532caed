#include <stdio.h>
#include <string.h>

#include "cfrac.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (line %d)\n", #cond, __LINE__); return 1; } } while (0)

int main(void) {
    char *s = NULL;
    CHECK(cfrac_expand_rational("47/17", &s) == CFRAC_STATUS_OK);
    CHECK(strcmp(s, "[2;1,3,4]") == 0);
    cfrac_string_free(s);

    CfracSurd *phi = NULL;
    CHECK(cfrac_periodic_to_surd("[(1)]", &phi) == CFRAC_STATUS_OK);
    CHECK(cfrac_surd_decimal(phi, 3, &s) == CFRAC_STATUS_OK);
    CHECK(strcmp(s, "1.618") == 0);
    cfrac_string_free(s);
    cfrac_surd_free(phi);

    char *x = NULL, *y = NULL;
    int sign = 0;
    CHECK(cfrac_pell_fundamental("61", &x, &y, &sign) == CFRAC_STATUS_OK);
    CHECK(strcmp(x, "29718") == 0 && strcmp(y, "3805") == 0 && sign == -1);
    cfrac_string_free(x);
    cfrac_string_free(y);

    CHECK(cfrac_sqrt_cf("9", &s) == CFRAC_STATUS_PERFECT_SQUARE);
    CHECK(cfrac_last_error_message() != NULL);

    puts("ok");
    return 0;
}
