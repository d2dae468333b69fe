#include <stdio.h>
#include <string.h>
#include "altcoinv.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "line %d: %s\n", __LINE__, #cond); return 1; } } while (0)

int main(void) {
    AltcoinvPath *path = NULL;
    CHECK(altcoinv_path_parse("NNEENE", &path) == ALTCOINV_STATUS_OK);
    size_t n = 0, area = 0, dinv = 0, bounce = 0;
    CHECK(altcoinv_path_stats(path, &n, &area, &dinv, &bounce) == ALTCOINV_STATUS_OK);
    CHECK(n == 3 && area == 1 && dinv == 2 && bounce == 1);

    AltcoinvPoly *d = NULL;
    CHECK(altcoinv_path_delta(path, &d) == ALTCOINV_STATUS_OK);
    AltcoinvPoly *ref = NULL;
    CHECK(altcoinv_poly_parse(3, "-x1*x2*y1 + x1*x2*y2 + x1*x3*y1 - x1*x3*y3 - x2*x3*y2 + x2*x3*y3", &ref) == ALTCOINV_STATUS_OK);
    int eq = 0;
    CHECK(altcoinv_poly_equal(d, ref, &eq) == ALTCOINV_STATUS_OK && eq == 1);

    char *text = NULL;
    CHECK(altcoinv_qt_catalan(3, &text) == ALTCOINV_STATUS_OK);
    CHECK(strcmp(text, "q^3 + q^2*t + q*t^2 + q*t + t^3") == 0);
    altcoinv_string_free(text);

    AltcoinvPath *bad = NULL;
    CHECK(altcoinv_path_parse("ENNE", &bad) == ALTCOINV_STATUS_PARSE_ERROR);
    CHECK(bad == NULL && altcoinv_last_error() != NULL);

    CHECK(altcoinv_verify_basis(3, NULL) == ALTCOINV_STATUS_OK);

    altcoinv_poly_free(ref);
    altcoinv_poly_free(d);
    altcoinv_path_free(path);
    puts("ok");
    return 0;
}
