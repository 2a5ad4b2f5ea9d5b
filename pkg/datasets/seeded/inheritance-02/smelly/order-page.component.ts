import { Component, Injectable } from '@angular/core';
import { BaseOrderPageComponent } from './base-order-page';

@Component({
  selector: 'app-order-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class OrderPageComponent extends BaseOrderPageComponent {
  pageTitle = 'Order Page';
}
