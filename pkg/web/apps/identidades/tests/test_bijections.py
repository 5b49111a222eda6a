from django.test import SimpleTestCase

from apps.identidades.pipeline.bijections import (
    MAPAS,
    ErrorFueraDeClase,
    MapaDesconocido,
    VarianteG,
    VarianteH,
    _f_por_binaria,
    aplicar_mapa,
    inversa_f,
    inversa_g,
    inversa_h,
    mapa_f,
    mapa_g,
    mapa_h,
)
from apps.identidades.pipeline.enumerators import (
    E_SOBRE,
    enumerar,
    enumerar_particiones,
    obtener_clase,
)
from apps.identidades.pipeline.partition_core import (
    Overpartition,
    Partition,
    formatear,
    parsear_sobreparticion,
)


class EjemplosTrabajadosTest(SimpleTestCase):
    """Ejemplos resueltos a mano: valores exactos"""

    def test_f_en_39(self):
        resultado = mapa_f(Partition((14, 13, 5, 4, 2, 1)))
        self.assertEqual(resultado.no_rayadas.partes, (12, 11, 4, 3, 2, 1))
        self.assertEqual(resultado.rayadas, (4, 2))

    def test_h_oe_en_88(self):
        resultado = mapa_h(Partition((20, 18, 15, 13, 10, 7, 4, 1)), VarianteH.OE)
        self.assertEqual(formatear(resultado), '15,13,11,9,7,5,3,1,7~,6~,5~,4~,2~')

    def test_h_eo_en_88(self):
        resultado = mapa_h(Partition((20, 18, 15, 13, 10, 7, 4, 1)), VarianteH.EO)
        self.assertEqual(formatear(resultado), '14,12,10,8,6,4,2,8~,7~,6~,5~,4~,2~')

    def test_h_eo_en_87(self):
        resultado = mapa_h(Partition((20, 18, 15, 13, 10, 7, 4)), VarianteH.EO)
        self.assertEqual(formatear(resultado), '16,14,12,10,8,6,4,6~,5~,4~,2~')

    def test_g_en_85(self):
        resultado = mapa_g(Partition((20, 17, 15, 12, 9, 7, 4, 1)), VarianteG.GG)
        self.assertEqual(formatear(resultado), '15,13,11,9,7,5,3,1,13~,7~,1~')

    def test_g_en_84(self):
        resultado = mapa_g(Partition((20, 17, 15, 12, 9, 7, 4)), VarianteG.GG)
        self.assertEqual(formatear(resultado), '15,13,11,9,7,5,3,13~,7~,1~')

    def test_inversas_de_los_ejemplos(self):
        self.assertEqual(
            inversa_h(parsear_sobreparticion('14,12,10,8,6,4,2,8~,7~,6~,5~,4~,2~'), VarianteH.EO),
            Partition((20, 18, 15, 13, 10, 7, 4, 1)),
        )
        self.assertEqual(
            inversa_g(parsear_sobreparticion('15,13,11,9,7,5,3,1,13~,7~,1~'), VarianteG.GG),
            Partition((20, 17, 15, 12, 9, 7, 4, 1)),
        )
        self.assertEqual(
            inversa_f(Overpartition(Partition((12, 11, 4, 3, 2, 1)), (4, 2))),
            Partition((14, 13, 5, 4, 2, 1)),
        )


class BiyeccionExhaustivaTest(SimpleTestCase):
    """
    Para cada mapa y cada partición de la clase de origen con n <= N_MAX:
    la imagen tiene el mismo peso, pertenece al destino, es única y vuelve
    a la partición original con la inversa.
    """

    N_MAX = 35

    def test_totalidad_imagen_e_ida_y_vuelta(self):
        for mapa_id, mapa in MAPAS.items():
            origen = obtener_clase(mapa.origen)
            destino = obtener_clase(mapa.destino)
            for n in range(self.N_MAX + 1):
                with self.subTest(mapa=mapa_id, n=n):
                    imagenes = set()
                    for particion in enumerar_particiones(n, origen):
                        imagen = mapa.directa(particion)
                        self.assertEqual(imagen.peso, n)
                        self.assertTrue(destino.admite(imagen), f"{particion} -> {imagen}")
                        self.assertEqual(mapa.inversa(imagen), particion)
                        imagenes.add(imagen)
                    self.assertEqual(len(imagenes), len(enumerar_particiones(n, origen)))

    def test_imagen_cubre_el_destino(self):
        for mapa_id, mapa in MAPAS.items():
            destino = obtener_clase(mapa.destino)
            for n in range(16):
                with self.subTest(mapa=mapa_id, n=n):
                    for sobreparticion in enumerar(n, destino):
                        self.assertEqual(mapa.directa(mapa.inversa(sobreparticion)), sobreparticion)


class RamaIdentidadDeFTest(SimpleTestCase):
    """Si λ ya es admisible en Ē sin rayadas, f la deja igual"""

    def test_uno_va_a_uno(self):
        self.assertEqual(mapa_f(Partition((1,))), Overpartition(Partition((1,))))

    def test_rama_coincide_con_la_ruta_general(self):
        distintas = obtener_clase('d')
        fijas = 0
        for n in range(36):
            for particion in enumerar_particiones(n, distintas):
                sin_rayadas = Overpartition(particion)
                if not E_SOBRE.admite(sin_rayadas):
                    continue
                fijas += 1
                self.assertEqual(mapa_f(particion), sin_rayadas)
                self.assertEqual(_f_por_binaria(particion), sin_rayadas)
        self.assertGreater(fijas, 0)


class ErroresTest(SimpleTestCase):

    def test_fuera_de_la_clase_de_origen(self):
        with self.assertRaises(ErrorFueraDeClase):
            mapa_h(Partition((3, 2)), VarianteH.OE)
        with self.assertRaises(ErrorFueraDeClase):
            mapa_f(Partition((2, 2)))

    def test_inversa_fuera_del_destino(self):
        with self.assertRaises(ErrorFueraDeClase):
            inversa_h(parsear_sobreparticion('4,2'), VarianteH.OE)

    def test_mapa_desconocido(self):
        with self.assertRaises(MapaDesconocido) as contexto:
            aplicar_mapa('k', Partition((1,)))
        self.assertIn('h-oe', contexto.exception.registrados)

    def test_aplicar_mapa_inverso(self):
        entrada = parsear_sobreparticion('15,13,11,9,7,5,3,1,7~,6~,5~,4~,2~')
        resultado = aplicar_mapa('h-oe', entrada, inversa=True)
        self.assertEqual(resultado, Partition((20, 18, 15, 13, 10, 7, 4, 1)))
