#include <stdio.h>
#include <string.h>
#include "nilcomplex.h"

int main(void) {
    NcStructure *s = NULL;
    if (nc_structure_three_step(1, "1+1i", "1", &s) != NC_STATUS_OK) {
        fprintf(stderr, "%s\n", nc_last_error());
        return 1;
    }
    char *name = NULL;
    if (nc_classify(s, &name) != NC_STATUS_OK || strcmp(name, "h12") != 0) {
        return 2;
    }
    uint32_t betti[7];
    if (nc_betti(s, betti) != NC_STATUS_OK) {
        return 3;
    }
    printf("%s b1=%u\n", name, betti[1]);
    nc_string_free(name);
    nc_structure_free(s);

    if (nc_structure_two_step(7, "1", "0", &s) != NC_STATUS_DOMAIN || nc_last_error()[0] == '\0') {
        return 4;
    }
    return 0;
}
