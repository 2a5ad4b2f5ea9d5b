import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-product-view', template: `<p>{{ title }}</p>` })
export class ProductViewComponent { title = 'Product view'; }
