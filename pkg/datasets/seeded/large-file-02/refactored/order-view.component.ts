import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-order-view', template: `<p>{{ title }}</p>` })
export class OrderViewComponent { title = 'Order view'; }
